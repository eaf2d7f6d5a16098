//! Singular structure: the hyperplanes `s_a + s_b = 1 - l` and
//! `s1 + s2 + s3 = 2`, their singular-part coefficients, and the general
//! depth-`r` candidate list.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::{binomial_complex, gamma, unit_power, zeta, ComplexValue, EPS};

/// One feature of the singular set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "feature", rename_all = "snake_case")]
pub enum SingularFeature {
    /// `s_a + s_b = 1 - l` (1-based labels, `a < b`).
    Pair { a: usize, b: usize, l: u32 },
    /// `s1 + s2 + s3 = 2`.
    Total,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SingularityKind {
    Regular,
    PairHyperplane { a: usize, b: usize, l: u32 },
    TotalPlane,
    IntegerIndeterminacy,
}

impl SingularityKind {
    pub fn name(&self) -> &'static str {
        match self {
            SingularityKind::Regular => "regular",
            SingularityKind::PairHyperplane { .. } => "pair_hyperplane",
            SingularityKind::TotalPlane => "total_plane",
            SingularityKind::IntegerIndeterminacy => "integer_indeterminacy",
        }
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityKind::PairHyperplane { a, b, l } => write!(f, "s{a} + s{b} = 1 - {l}"),
            SingularityKind::TotalPlane => write!(f, "s1 + s2 + s3 = 2"),
            other => f.write_str(other.name()),
        }
    }
}

/// Nearest-feature classification of a point.
///
/// `distance` is the coordinate-sum residual `|s_a + s_b - (1 - l)|` (or
/// `|s1 + s2 + s3 - 2|`) of the nearest feature; `hits` lists every feature
/// within the classification tolerance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityReport {
    #[serde(flatten)]
    pub kind: SingularityKind,
    pub distance: f64,
    pub hits: Vec<SingularFeature>,
}

impl SingularityReport {
    pub fn is_regular(&self) -> bool {
        self.kind == SingularityKind::Regular
    }
}

const PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

// Nearest l >= 0 to the sum, limited to the search window.
fn nearest_pair_feature(sum: Complex64, lmax: u32) -> (u32, f64) {
    let l = (1.0 - sum.re).round().clamp(0.0, lmax as f64) as u32;
    (l, (sum - (1.0 - l as f64)).norm())
}

fn l_window(s: &[Complex64; 3]) -> u32 {
    let m = s.iter().map(|z| z.re.abs()).fold(0.0, f64::max);
    (2.0 * (1.0 + m) + 4.0).ceil() as u32
}

/// All features with their residuals; `pairs` selects which pair
/// hyperplanes belong to the function being checked.
pub(crate) fn features(
    s: &[Complex64; 3],
    pairs: &[(usize, usize)],
    with_total: bool,
) -> Vec<(SingularFeature, f64)> {
    let lmax = l_window(s);
    let mut out: Vec<(SingularFeature, f64)> = pairs
        .iter()
        .map(|&(a, b)| {
            let (l, d) = nearest_pair_feature(s[a - 1] + s[b - 1], lmax);
            (SingularFeature::Pair { a, b, l }, d)
        })
        .collect();
    if with_total {
        out.push((SingularFeature::Total, (s[0] + s[1] + s[2] - 2.0).norm()));
    }
    out
}

fn is_real_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re == z.re.round()
}

pub(crate) fn report_from(
    s: &[Complex64; 3],
    feats: Vec<(SingularFeature, f64)>,
    tol: f64,
) -> SingularityReport {
    let mut feats = feats;
    feats.sort_by(|x, y| x.1.total_cmp(&y.1));
    let hits: Vec<SingularFeature> = feats
        .iter()
        .filter(|(_, d)| *d <= tol)
        .map(|(f, _)| *f)
        .collect();
    let (nearest, distance) = feats[0];
    let kind = if hits.is_empty() {
        SingularityKind::Regular
    } else if s.iter().all(|&z| is_real_integer(z)) {
        SingularityKind::IntegerIndeterminacy
    } else {
        match nearest {
            SingularFeature::Pair { a, b, l } => SingularityKind::PairHyperplane { a, b, l },
            SingularFeature::Total => SingularityKind::TotalPlane,
        }
    };
    SingularityReport {
        kind,
        distance,
        hits,
    }
}

/// Classifies against the singular set of the unified omega function,
/// counting a feature as hit when its residual is at most `tol`.
pub fn classify_point_with_tol(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
    tol: f64,
) -> SingularityReport {
    let s = [s1, s2, s3];
    report_from(&s, features(&s, &PAIRS, true), tol)
}

/// Classification with a tight default tolerance (`1e-12`).
pub fn classify_point(s1: Complex64, s2: Complex64, s3: Complex64) -> SingularityReport {
    classify_point_with_tol(s1, s2, s3, 1e-12)
}

/// Singular set of the Mordell-Tornheim function `zeta_MT(s1, s2; s3)`
/// alone: `s1 + s3`, `s2 + s3` in `1 - Z_{>=0}` and the total plane.
pub(crate) fn mt_singularity(s: &[Complex64; 3], tol: f64) -> SingularityReport {
    report_from(s, features(s, &[(1, 3), (2, 3)], true), tol)
}

/// Coefficient of the simple pole `zeta(s1 + s3 + l)` of omega_U along
/// `s1 + s3 = 1 - l`:
/// `((-1)^{s1} - (-1)^{-s1}) binom(-s1, l) zeta(s2 - l)`.
pub fn singular_coefficient_pair(s1: Complex64, l: u32, s2: Complex64) -> Result<ComplexValue> {
    let w = s2 - l as f64;
    if w == Complex64::new(1.0, 0.0) {
        return Err(Error::PoleAtOne);
    }
    let phase = unit_power(s1) - unit_power(-s1);
    if phase == Complex64::new(0.0, 0.0) {
        return Ok(ComplexValue::ZERO);
    }
    let binom = binomial_complex(-s1, l as usize);
    let (z, ze) = zeta(w);
    let v = phase * binom * z;
    Ok(ComplexValue::with_err(
        v,
        (phase * binom).norm() * ze + 8.0 * EPS * v.norm(),
    ))
}

/// `sum_j ((-1)^{2 s_{3+j}} - 1)`, the phase numerator of the total-plane
/// coefficient.
pub fn total_plane_numerator(s1: Complex64, s2: Complex64, s3: Complex64) -> Complex64 {
    [s1, s2, s3]
        .iter()
        .map(|&s| unit_power(2.0 * s) - 1.0)
        .sum()
}

/// Singular coefficient along `s1 + s2 + s3 = 2`:
/// `pi^2 / (2i prod_a Gamma(s_a) sin(pi s_a)) * sum_j ((-1)^{2 s_j} - 1)`,
/// evaluated as `prod_a Gamma(1 - s_a) / (2 pi i) * numerator` so that the
/// zeros of `sin` never appear in a denominator.
pub fn singular_coefficient_total(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
) -> Result<ComplexValue> {
    let s = [s1, s2, s3];
    let residual = (s1 + s2 + s3 - 2.0).norm();
    let scale = 1.0 + s.iter().map(|z| z.norm()).sum::<f64>();
    if residual > 1e-9 * scale {
        return Err(Error::OffTotalPlane(residual));
    }
    if s.iter().all(|&z| is_real_integer(z)) {
        return Err(Error::IndeterminateAtLattice);
    }
    if s.iter().any(|&z| is_real_integer(z) && z.re >= 1.0) {
        return Err(Error::CoefficientPole);
    }
    let num = total_plane_numerator(s1, s2, s3);
    let prod: Complex64 = s.iter().map(|&z| gamma(1.0 - z)).product();
    let v = prod * num / Complex64::new(0.0, 2.0 * PI);
    Ok(ComplexValue::with_err(v, 1e-13 * v.norm()))
}

/// A family of candidate singular hyperplanes `sum_{a in J} s_a = offset - l`
/// (`l >= 0` when `shifts` is set, else `l = 0` only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneFamily {
    pub indices: Vec<usize>,
    pub offset: i64,
    pub shifts: bool,
}

impl fmt::Display for HyperplaneFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self.indices.iter().map(|i| format!("s{i}")).collect();
        if self.shifts {
            write!(f, "{} = {} - l", lhs.join(" + "), self.offset)
        } else {
            write!(f, "{} = {}", lhs.join(" + "), self.offset)
        }
    }
}

/// Candidate singularities of the depth-`r` unified omega function:
/// every subset `J` with `2 <= |J| <= r - 1` gives `sum_J s = |J| - 1 - l`,
/// and the full set gives `s_1 + ... + s_r = r - 1`.
pub fn possible_singular_hyperplanes(r: usize) -> Vec<HyperplaneFamily> {
    assert!(r >= 2, "depth must be at least 2");
    let mut out = Vec::new();
    for size in 2..r {
        for subset in subsets(r, size) {
            out.push(HyperplaneFamily {
                indices: subset,
                offset: size as i64 - 1,
                shifts: true,
            });
        }
    }
    out.push(HyperplaneFamily {
        indices: (1..=r).collect(),
        offset: r as i64 - 1,
        shifts: false,
    });
    out
}

// k-subsets of {1..n} in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn classify_examples() {
        let r = classify_point(c(0.3), c(0.4), c(0.2));
        assert_eq!(r.kind, SingularityKind::Regular);
        assert!((r.distance - 0.3).abs() < 1e-12, "{}", r.distance);

        let r = classify_point(c(0.5), c(0.5), c(0.5));
        assert!(matches!(
            r.kind,
            SingularityKind::PairHyperplane { l: 0, .. }
        ));
        assert_eq!(r.hits.len(), 3);
        for h in &r.hits {
            assert!(matches!(h, SingularFeature::Pair { l: 0, .. }));
        }

        let r = classify_point(c(0.0), c(0.0), c(1.0));
        assert_eq!(r.kind, SingularityKind::IntegerIndeterminacy);

        let r = classify_point(c(0.25), c(0.75), c(1.0));
        assert!(r.hits.contains(&SingularFeature::Total));
    }

    #[test]
    fn classify_is_permutation_equivariant() {
        let s = [c(0.7), c(-1.7), c(0.45)];
        let base = classify_point(s[0], s[1], s[2]);
        // swap s1 <-> s3: pair (1,2) becomes (2,3)
        let swapped = classify_point(s[2], s[1], s[0]);
        assert_eq!(base.distance, swapped.distance);
        let relabel = |f: SingularFeature| match f {
            SingularFeature::Pair { a, b, l } => {
                let m = |i: usize| 4 - i;
                let (x, y) = (m(a).min(m(b)), m(a).max(m(b)));
                SingularFeature::Pair { a: x, b: y, l }
            }
            SingularFeature::Total => SingularFeature::Total,
        };
        let mut lhs: Vec<_> = base.hits.into_iter().map(relabel).collect();
        let mut rhs = swapped.hits;
        lhs.sort_by_key(|f| format!("{f:?}"));
        rhs.sort_by_key(|f| format!("{f:?}"));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pair_coefficient_examples() {
        for k in -5..=5 {
            for l in [0, 1, 3, 4] {
                let v = singular_coefficient_pair(c(k as f64), l, c(3.0)).unwrap();
                assert_eq!(v.value, Complex64::new(0.0, 0.0));
            }
        }
        let z3 = 1.202_056_903_159_594_2;
        let v = singular_coefficient_pair(c(0.5), 0, c(3.0)).unwrap().value;
        assert!((v - Complex64::new(0.0, 2.0 * z3)).norm() < 1e-14);
        let v = singular_coefficient_pair(c(0.5), 1, c(3.0)).unwrap().value;
        assert!((v - Complex64::new(0.0, -PI * PI / 6.0)).norm() < 1e-14);
        assert!(matches!(
            singular_coefficient_pair(c(0.5), 1, c(2.0)),
            Err(Error::PoleAtOne)
        ));
    }

    #[test]
    fn total_numerator_examples() {
        assert_eq!(
            total_plane_numerator(c(0.0), c(1.0), c(1.0)),
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            total_plane_numerator(c(3.0), c(-2.0), c(1.0)),
            Complex64::new(0.0, 0.0)
        );
        let n = total_plane_numerator(c(0.5), c(0.5), c(1.0));
        assert_eq!(n, Complex64::new(-4.0, 0.0));
        let n = total_plane_numerator(c(1.0 / 3.0), c(1.0 / 3.0), c(4.0 / 3.0));
        assert!((n.norm() - 3.0 * 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn total_coefficient_paths() {
        assert!(matches!(
            singular_coefficient_total(c(0.0), c(1.0), c(1.0)),
            Err(Error::IndeterminateAtLattice)
        ));
        assert!(matches!(
            singular_coefficient_total(c(0.5), c(0.5), c(1.0)),
            Err(Error::CoefficientPole)
        ));
        assert!(matches!(
            singular_coefficient_total(c(0.5), c(0.5), c(0.5)),
            Err(Error::OffTotalPlane(_))
        ));
        // direct formula with sin in the denominator at a generic point
        let s = [c(0.3), c(0.9), c(0.8)];
        let v = singular_coefficient_total(s[0], s[1], s[2]).unwrap().value;
        let den: Complex64 = s
            .iter()
            .map(|&z| gamma(z) * crate::special::sin_pi(z))
            .product();
        let expect =
            PI * PI / (Complex64::new(0.0, 2.0) * den) * total_plane_numerator(s[0], s[1], s[2]);
        assert!((v - expect).norm() < 1e-12 * expect.norm());
    }

    #[test]
    fn hyperplane_lists() {
        let r2 = possible_singular_hyperplanes(2);
        assert_eq!(r2.len(), 1);
        assert_eq!(r2[0].to_string(), "s1 + s2 = 1");

        let r3: Vec<String> = possible_singular_hyperplanes(3)
            .iter()
            .map(|h| h.to_string())
            .collect();
        assert_eq!(
            r3,
            [
                "s1 + s2 = 1 - l",
                "s1 + s3 = 1 - l",
                "s2 + s3 = 1 - l",
                "s1 + s2 + s3 = 2"
            ]
        );

        let r4 = possible_singular_hyperplanes(4);
        assert_eq!(
            r4.iter()
                .filter(|h| h.indices.len() == 2 && h.offset == 1)
                .count(),
            6
        );
        assert_eq!(
            r4.iter()
                .filter(|h| h.indices.len() == 3 && h.offset == 2)
                .count(),
            4
        );
        assert_eq!(r4.last().unwrap().to_string(), "s1 + s2 + s3 + s4 = 3");
    }
}
