//! Exact Heawood-number and Euler-genus arithmetic.
//!
//! Everything here is integer arithmetic over any [`GenusScalar`]: `i64` for
//! everyday use, `i128` or [`num_bigint::BigInt`] when the genus gets large.
//! Square roots are taken with a Newton iteration on integers, so values next
//! to perfect squares (`24ε + 1 = 169` at `ε = 7`) never mis-round.

use std::collections::BTreeMap;
use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Integer types the genus arithmetic can run over.
pub trait GenusScalar:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display
{
}

impl<T> GenusScalar for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display
{
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenusError {
    #[error("Heawood number is only defined for Euler genus >= 1, got {0}")]
    NonPositiveGenus(String),
    #[error("complete graph K_n needs n >= 3, got {0}")]
    CliqueTooSmall(String),
    #[error("edge bound needs n >= 3, got {0}")]
    TooFewVertices(String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("degree profile counts sum to {sum}, expected n = {n}")]
    InconsistentProfile { n: usize, sum: usize },
    #[error("Euler genus {0} is not a special case (H = 3i + 4, eps = (3i^2 + 3i)/2)")]
    NotSpecialCase(String),
    #[error("critical subgraph order must be H or H + 1 (H = {heawood}), got {nprime}")]
    CriticalOrderOutOfRange { heawood: String, nprime: String },
    #[error("value {0} does not fit the requested integer type")]
    Overflow(String),
}

fn lit<T: GenusScalar>(v: i64) -> T {
    T::from_i64(v).expect("small literal fits every genus scalar")
}

fn from_count<T: GenusScalar>(v: usize) -> T {
    T::from_usize(v).expect("vertex counts fit every genus scalar")
}

/// Largest `s` with `s * s <= m`, by Newton iteration from above.
///
/// Panics on negative input.
pub fn isqrt<T: GenusScalar>(m: &T) -> T {
    assert!(!m.is_negative(), "isqrt of a negative number");
    let two: T = lit(2);
    if *m < two {
        return m.clone();
    }
    let mut x = m.clone();
    loop {
        let y = (x.clone() + m.clone() / x.clone()) / two.clone();
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `H(ε) = ⌊(7 + √(24ε + 1)) / 2⌋` for `ε >= 1`.
pub fn heawood_number<T: GenusScalar>(epsilon: &T) -> Result<T, GenusError> {
    if *epsilon < T::one() {
        return Err(GenusError::NonPositiveGenus(epsilon.to_string()));
    }
    let disc = lit::<T>(24) * epsilon.clone() + T::one();
    Ok((lit::<T>(7) + isqrt(&disc)) / lit(2))
}

/// Least Euler genus on which `K_n` embeds, `⌈(n−3)(n−4)/6⌉`.
///
/// The flag is set for `K_7`, which embeds on the torus but not on the Klein
/// bottle even though both have Euler genus 2.
pub fn min_genus_complete<T: GenusScalar>(n: &T) -> Result<(T, bool), GenusError> {
    if *n < lit(3) {
        return Err(GenusError::CliqueTooSmall(n.to_string()));
    }
    let prod = (n.clone() - lit(3)) * (n.clone() - lit(4));
    let eps = prod.div_ceil(&lit(6));
    Ok((eps, *n == lit(7)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientability {
    Orientable,
    Nonorientable,
    Either,
}

/// A surface known only by its Euler genus, plus an orientability hint.
///
/// The hint matters for exactly one thing: the Klein bottle exception.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceGenus<T> {
    epsilon: T,
    orientability: Orientability,
}

impl<T: GenusScalar> SurfaceGenus<T> {
    pub fn new(epsilon: T, orientability: Orientability) -> Result<Self, GenusError> {
        if epsilon.is_negative() {
            return Err(GenusError::InvalidSurface(format!(
                "negative Euler genus {epsilon}"
            )));
        }
        match orientability {
            Orientability::Orientable if epsilon.is_odd() => {
                return Err(GenusError::InvalidSurface(format!(
                    "orientable surfaces have even Euler genus, got {epsilon}"
                )))
            }
            Orientability::Nonorientable if epsilon.is_zero() => {
                return Err(GenusError::InvalidSurface(
                    "the sphere is orientable".to_string(),
                ))
            }
            _ => {}
        }
        Ok(Self {
            epsilon,
            orientability,
        })
    }

    pub fn klein_bottle() -> Self {
        Self {
            epsilon: lit(2),
            orientability: Orientability::Nonorientable,
        }
    }

    pub fn epsilon(&self) -> &T {
        &self.epsilon
    }

    pub fn orientability(&self) -> Orientability {
        self.orientability
    }

    pub fn is_klein_bottle(&self) -> bool {
        self.orientability == Orientability::Nonorientable && self.epsilon == lit(2)
    }
}

/// Which of the three residues `H(ε) − 3i − 3 ∈ {0, 1, 2}` a window belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WindowCase {
    /// `H = 3i + 3`
    A,
    /// `H = 3i + 4`
    B,
    /// `H = 3i + 5`
    C,
}

/// The maximal run of Euler genera sharing the same Heawood number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusWindow<T> {
    pub i: T,
    pub heawood: T,
    pub eps_lo: T,
    pub eps_hi: T,
    pub case: WindowCase,
    /// Set when `H = 3i + 4` and `ε = (3i² + 3i)/2`; only then does Euler's
    /// formula leave room for `K_{H+1} − E`.
    pub special: bool,
}

impl<T: GenusScalar> GenusWindow<T> {
    /// Number of genera in the window.
    pub fn len(&self) -> T {
        self.eps_hi.clone() - self.eps_lo.clone() + T::one()
    }

    pub fn contains(&self, epsilon: &T) -> bool {
        self.eps_lo <= *epsilon && *epsilon <= self.eps_hi
    }
}

/// Bounds of the window with parameter `i` and case `case`.
pub fn window_bounds<T: GenusScalar>(i: &T, case: WindowCase) -> (T, T) {
    let sq = lit::<T>(3) * i.clone() * i.clone();
    let two = lit::<T>(2);
    match case {
        WindowCase::A => (
            (sq.clone() - i.clone()) / two.clone(),
            (sq + i.clone() - two.clone()) / two,
        ),
        WindowCase::B => (
            (sq.clone() + i.clone()) / two.clone(),
            (sq + lit::<T>(3) * i.clone()) / two,
        ),
        WindowCase::C => (
            (sq.clone() + lit::<T>(3) * i.clone() + two.clone()) / two.clone(),
            (sq + lit::<T>(5) * i.clone()) / two,
        ),
    }
}

pub fn genus_window<T: GenusScalar>(epsilon: &T) -> Result<GenusWindow<T>, GenusError> {
    let heawood = heawood_number(epsilon)?;
    let three = lit::<T>(3);
    let i = (heawood.clone() - three.clone()) / three.clone();
    let residue = heawood.clone() - three.clone() * i.clone() - three;
    let case = if residue.is_zero() {
        WindowCase::A
    } else if residue == T::one() {
        WindowCase::B
    } else {
        WindowCase::C
    };
    let (eps_lo, eps_hi) = window_bounds(&i, case);
    debug_assert!(eps_lo <= *epsilon && *epsilon <= eps_hi);
    let special = case == WindowCase::B && *epsilon == eps_hi;
    Ok(GenusWindow {
        i,
        heawood,
        eps_lo,
        eps_hi,
        case,
        special,
    })
}

/// `ε = (3i² + 3i)/2`, the special genus for parameter `i`.
pub fn special_genus<T: GenusScalar>(i: &T) -> T {
    window_bounds(i, WindowCase::B).1
}

pub fn is_special_case<T: GenusScalar>(epsilon: &T) -> bool {
    genus_window(epsilon).map(|w| w.special).unwrap_or(false)
}

/// What is known about embedding `K_{H+1} − E` in a special case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialCaseStatus {
    /// `i = 1`: `K_8 − E` does not embed on the genus-3 surface.
    NotEmbeddable,
    /// `i > 1` and `H ≡ 1, 4, 10 (mod 12)`.
    Embeddable,
    /// `H ≡ 7 (mod 12)`: left open in the literature.
    Unknown,
}

pub fn special_case_status<T: GenusScalar>(window: &GenusWindow<T>) -> Option<SpecialCaseStatus> {
    if !window.special {
        return None;
    }
    if window.i == T::one() {
        return Some(SpecialCaseStatus::NotEmbeddable);
    }
    let residue = window.heawood.mod_floor(&lit(12));
    if residue == lit(7) {
        Some(SpecialCaseStatus::Unknown)
    } else {
        Some(SpecialCaseStatus::Embeddable)
    }
}

/// Order of the largest complete graph embeddable on the surface.
pub fn largest_embeddable_clique<T: GenusScalar>(
    surface: &SurfaceGenus<T>,
) -> Result<T, GenusError> {
    if surface.is_klein_bottle() {
        return Ok(lit(6));
    }
    heawood_number(surface.epsilon())
}

/// `3n + 3(ε − 2)`: the edge ceiling for an embedding whose faces all have
/// length at least three. Accepts `ε = 0`.
pub fn edge_bound<T: GenusScalar>(n: &T, epsilon: &T) -> Result<T, GenusError> {
    if *n < lit(3) {
        return Err(GenusError::TooFewVertices(n.to_string()));
    }
    Ok(lit::<T>(3) * n.clone() + lit::<T>(3) * (epsilon.clone() - lit(2)))
}

/// Right-hand side `6(ε − 1) − (H(ε) − 6)n` of the face-degree inequality.
pub fn inequality_star<T: GenusScalar>(epsilon: &T, n: &T) -> Result<T, GenusError> {
    let h = heawood_number(epsilon)?;
    Ok(lit::<T>(6) * (epsilon.clone() - T::one()) - (h - lit(6)) * n.clone())
}

/// Degree statistics of a graph with a distinguished face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    n: usize,
    degree_counts: BTreeMap<usize, usize>,
    face_high_count: usize,
}

impl DegreeProfile {
    /// `face_high_count` is the number of face vertices with degree `>= H(ε)`.
    pub fn new(
        n: usize,
        degree_counts: BTreeMap<usize, usize>,
        face_high_count: usize,
    ) -> Result<Self, GenusError> {
        let sum: usize = degree_counts.values().sum();
        if sum != n || face_high_count > n {
            return Err(GenusError::InconsistentProfile { n, sum });
        }
        Ok(Self {
            n,
            degree_counts,
            face_high_count,
        })
    }

    /// Builds the profile from per-vertex degrees and face membership.
    pub fn from_degrees(degrees: &[usize], on_face: &[bool], heawood: usize) -> Self {
        assert_eq!(degrees.len(), on_face.len());
        let mut degree_counts = BTreeMap::new();
        for &d in degrees {
            *degree_counts.entry(d).or_insert(0) += 1;
        }
        let face_high_count = degrees
            .iter()
            .zip(on_face)
            .filter(|(&d, &f)| f && d >= heawood)
            .count();
        Self {
            n: degrees.len(),
            degree_counts,
            face_high_count,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn face_high_count(&self) -> usize {
        self.face_high_count
    }

    /// `d_j`
    pub fn count(&self, degree: usize) -> usize {
        self.degree_counts.get(&degree).copied().unwrap_or(0)
    }

    /// `d_{>=j}`
    pub fn count_at_least(&self, degree: usize) -> usize {
        self.degree_counts.range(degree..).map(|(_, c)| c).sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degree_counts
            .iter()
            .find(|(_, &c)| c > 0)
            .map(|(&d, _)| d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck<T> {
    pub lhs: T,
    pub rhs: T,
    pub holds: bool,
    /// `rhs − lhs`
    pub slack: T,
}

impl<T: GenusScalar> InequalityCheck<T> {
    fn at_most(lhs: T, rhs: T) -> Self {
        let holds = lhs <= rhs;
        let slack = rhs.clone() - lhs.clone();
        Self {
            lhs,
            rhs,
            holds,
            slack,
        }
    }
}

/// The strict chain `(H−6)n < (H−6)(d_{H−2}+d_H) + (H−5)d_{>=H+1} <= 6(ε−1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCheck<T> {
    pub lhs: T,
    pub middle: T,
    pub rhs: T,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileInequality {
    Star,
    DoubleStar,
    TripleStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "inequality")]
pub enum ProfileVerdict {
    /// `n <= H(ε)`; handled by the small-graph base case, not by counting.
    OutOfTheoremRange,
    /// A vertex of degree `<= H(ε) − 3` exists, so the graph reduces by deletion.
    ReducibleLowDegree,
    /// A necessary inequality fails: no minimal counterexample has this profile.
    ContradictionReached(ProfileInequality),
    /// Every face vertex has degree `H − 2` and every other vertex degree `H`.
    BlockStructureCase,
    /// Special-case genus with `0 < d_{H−1} + 2 d^F_{>=H} <= 4`.
    SpecialCaseResidual,
    /// The counting argument alone settles nothing for this profile.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport<T> {
    pub epsilon: T,
    pub heawood: T,
    pub n: usize,
    pub special: bool,
    /// `ε = 3` is outside the theorem; the numbers are still reported.
    pub excluded_genus: bool,
    pub star: Option<InequalityCheck<T>>,
    pub double_star: Option<InequalityCheck<T>>,
    pub triple_star: Option<ChainCheck<T>>,
    pub verdict: ProfileVerdict,
}

/// Evaluates the counting inequalities of the induction step for a profile.
///
/// `(*)` is evaluated when `n >= H + 1` and every degree is at least `H − 2`.
/// `(**)` and the strict chain assume the profile left after `(*)` forces
/// `d_{H−1} = d^F_{>=H} = 0`, and are only evaluated in that situation.
pub fn check_profile_inequalities<T: GenusScalar>(
    profile: &DegreeProfile,
    epsilon: &T,
) -> Result<ProfileReport<T>, GenusError> {
    let sum: usize = profile.degree_counts.values().sum();
    if sum != profile.n {
        return Err(GenusError::InconsistentProfile { n: profile.n, sum });
    }
    let window = genus_window(epsilon)?;
    let h_t = window.heawood.clone();
    let h = h_t
        .to_usize()
        .ok_or_else(|| GenusError::Overflow(h_t.to_string()))?;
    let n = profile.n;
    let n_t: T = from_count(n);
    let euler_term = lit::<T>(6) * (epsilon.clone() - T::one());

    let min_degree_ok = profile.min_degree().is_none_or(|d| d + 2 >= h);
    let in_range = n > h;

    let star = (in_range && min_degree_ok).then(|| {
        let lhs: T = from_count::<T>(profile.count(h - 1))
            + lit::<T>(2) * from_count::<T>(profile.face_high_count);
        let rhs = euler_term.clone() - (h_t.clone() - lit(6)) * n_t.clone();
        InequalityCheck::at_most(lhs, rhs)
    });

    let reduced_shape = min_degree_ok && profile.count(h - 1) == 0 && profile.face_high_count == 0;
    let d_low = profile.count(h - 2);
    let d_mid = profile.count(h);
    let d_high = profile.count_at_least(h + 1);

    let double_star = reduced_shape.then(|| {
        let lhs = (h_t.clone() - lit(5)) * n_t.clone();
        let rhs = euler_term.clone() + from_count(d_low + d_mid);
        InequalityCheck::at_most(lhs, rhs)
    });

    let triple_star = (reduced_shape && in_range && d_high > 0).then(|| {
        let lhs = (h_t.clone() - lit(6)) * n_t.clone();
        let middle = (h_t.clone() - lit(6)) * from_count(d_low + d_mid)
            + (h_t.clone() - lit(5)) * from_count(d_high);
        let holds = lhs < middle && middle <= euler_term;
        ChainCheck {
            lhs,
            middle,
            rhs: euler_term.clone(),
            holds,
        }
    });

    let verdict = if double_star.as_ref().is_some_and(|c| !c.holds) {
        ProfileVerdict::ContradictionReached(ProfileInequality::DoubleStar)
    } else if !in_range {
        ProfileVerdict::OutOfTheoremRange
    } else if !min_degree_ok {
        ProfileVerdict::ReducibleLowDegree
    } else if star.as_ref().is_some_and(|c| !c.holds) {
        ProfileVerdict::ContradictionReached(ProfileInequality::Star)
    } else if window.special && !reduced_shape {
        ProfileVerdict::SpecialCaseResidual
    } else if reduced_shape && n == d_low + d_mid {
        ProfileVerdict::BlockStructureCase
    } else if triple_star.as_ref().is_some_and(|c| !c.holds) {
        ProfileVerdict::ContradictionReached(ProfileInequality::TripleStar)
    } else {
        ProfileVerdict::Undecided
    };

    Ok(ProfileReport {
        epsilon: epsilon.clone(),
        heawood: h_t,
        n,
        special: window.special,
        excluded_genus: *epsilon == lit(3),
        star,
        double_star,
        triple_star,
        verdict,
    })
}

/// One row of the Heawood table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeawoodRow<T> {
    pub epsilon: T,
    pub heawood: T,
    pub window: GenusWindow<T>,
    pub special_status: Option<SpecialCaseStatus>,
    /// Present only for the Klein bottle, where the largest clique is `K_6`.
    pub klein_bottle_clique: Option<T>,
}

pub fn heawood_table<T: GenusScalar>(eps_max: &T) -> Result<Vec<HeawoodRow<T>>, GenusError> {
    if *eps_max < T::one() {
        return Err(GenusError::NonPositiveGenus(eps_max.to_string()));
    }
    let mut rows = Vec::new();
    let mut eps = T::one();
    while eps <= *eps_max {
        let window = genus_window(&eps)?;
        let klein = (eps == lit(2))
            .then(|| largest_embeddable_clique(&SurfaceGenus::klein_bottle()))
            .transpose()?;
        rows.push(HeawoodRow {
            epsilon: eps.clone(),
            heawood: window.heawood.clone(),
            special_status: special_case_status(&window),
            window,
            klein_bottle_clique: klein,
        });
        eps = eps + T::one();
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn brute_isqrt(m: u64) -> u64 {
        let mut s = 0u64;
        while (s + 1) * (s + 1) <= m {
            s += 1;
        }
        s
    }

    #[test]
    fn isqrt_matches_linear_scan() {
        for m in 0..5000i64 {
            assert_eq!(isqrt(&m) as u64, brute_isqrt(m as u64), "m = {m}");
        }
    }

    #[test]
    fn isqrt_near_perfect_squares_bigint() {
        let base = BigInt::from(10).pow(40) + BigInt::from(12345);
        let sq = &base * &base;
        assert_eq!(isqrt(&sq), base);
        assert_eq!(isqrt(&(&sq - 1)), &base - 1);
        assert_eq!(isqrt(&(&sq + 1)), base);
    }

    #[test]
    fn heawood_known_values() {
        assert_eq!(heawood_number(&1i64), Ok(6));
        assert_eq!(heawood_number(&2i64), Ok(7));
        assert_eq!(heawood_number(&9i64), Ok(10));
        // 24 * 7 + 1 = 169 = 13^2
        assert_eq!(heawood_number(&7i64), Ok(10));
        assert_eq!(heawood_number(&6i64), Ok(9));
    }

    #[test]
    fn heawood_rejects_nonpositive() {
        assert!(matches!(
            heawood_number(&0i64),
            Err(GenusError::NonPositiveGenus(_))
        ));
        assert!(heawood_number(&-4i64).is_err());
    }

    #[test]
    fn min_genus_values() {
        assert_eq!(min_genus_complete(&7i64), Ok((2, true)));
        assert_eq!(min_genus_complete(&4i64), Ok((0, false)));
        assert_eq!(min_genus_complete(&10i64), Ok((7, false)));
        assert!(min_genus_complete(&2i64).is_err());
    }

    #[test]
    fn window_examples() {
        let w = genus_window(&2i64).unwrap();
        assert_eq!((w.i, w.heawood, w.eps_lo, w.eps_hi, w.special), (1, 7, 2, 3, false));
        let w = genus_window(&3i64).unwrap();
        assert_eq!((w.i, w.heawood, w.eps_lo, w.eps_hi, w.special), (1, 7, 2, 3, true));
        // i = 2, case B: lower end (3*4 + 2)/2 = 7
        let w = genus_window(&9i64).unwrap();
        assert_eq!((w.i, w.heawood, w.eps_lo, w.eps_hi, w.special), (2, 10, 7, 9, true));
    }

    #[test]
    fn klein_bottle_exception() {
        let kb = SurfaceGenus::<i64>::klein_bottle();
        assert_eq!(largest_embeddable_clique(&kb), Ok(6));
        let torus = SurfaceGenus::new(2i64, Orientability::Orientable).unwrap();
        assert_eq!(largest_embeddable_clique(&torus), Ok(7));
        let pp = SurfaceGenus::new(1i64, Orientability::Nonorientable).unwrap();
        assert_eq!(largest_embeddable_clique(&pp), Ok(6));
        assert!(SurfaceGenus::new(1i64, Orientability::Orientable).is_err());
        assert!(SurfaceGenus::new(0i64, Orientability::Nonorientable).is_err());
    }

    #[test]
    fn edge_bound_values() {
        assert_eq!(edge_bound(&5i64, &1), Ok(12));
        assert_eq!(edge_bound(&3i64, &0), Ok(3));
        assert_eq!(edge_bound(&9i64, &4), Ok(33));
        assert!(edge_bound(&2i64, &0).is_err());
    }

    #[test]
    fn star_values() {
        assert_eq!(inequality_star(&3i64, &8), Ok(4));
        assert_eq!(inequality_star(&1i64, &7), Ok(0));
        assert_eq!(inequality_star(&9i64, &12), Ok(0));
    }

    fn uniform_profile(n: usize, degree: usize, face_high: usize) -> DegreeProfile {
        DegreeProfile::new(n, BTreeMap::from([(degree, n)]), face_high).unwrap()
    }

    #[test]
    fn profile_k6_projective_out_of_range() {
        let r = check_profile_inequalities(&uniform_profile(6, 5, 0), &1i64).unwrap();
        assert_eq!(r.verdict, ProfileVerdict::OutOfTheoremRange);
        assert!(r.star.is_none());
    }

    #[test]
    fn profile_genus_two_contradiction() {
        let r = check_profile_inequalities(&uniform_profile(7, 5, 0), &2i64).unwrap();
        let ds = r.double_star.clone().unwrap();
        assert_eq!((ds.lhs, ds.rhs, ds.holds), (14, 13, false));
        assert_eq!(
            r.verdict,
            ProfileVerdict::ContradictionReached(ProfileInequality::DoubleStar)
        );
    }

    #[test]
    fn profile_genus_four_block_case() {
        let p = DegreeProfile::new(9, BTreeMap::from([(6, 4), (8, 5)]), 0).unwrap();
        let r = check_profile_inequalities(&p, &4i64).unwrap();
        let ds = r.double_star.clone().unwrap();
        assert_eq!((ds.lhs, ds.rhs, ds.slack), (27, 27, 0));
        assert!(r.star.unwrap().holds);
        assert_eq!(r.verdict, ProfileVerdict::BlockStructureCase);
    }

    #[test]
    fn profile_rejects_inconsistent_counts() {
        assert!(matches!(
            DegreeProfile::new(5, BTreeMap::from([(3, 4)]), 0),
            Err(GenusError::InconsistentProfile { n: 5, sum: 4 })
        ));
    }

    #[test]
    fn special_statuses() {
        let s = |eps: i64| special_case_status(&genus_window(&eps).unwrap());
        assert_eq!(s(3), Some(SpecialCaseStatus::NotEmbeddable));
        // H = 10
        assert_eq!(s(9), Some(SpecialCaseStatus::Embeddable));
        // i = 3: H = 13, eps = 18
        assert_eq!(s(18), Some(SpecialCaseStatus::Embeddable));
        // i = 5: H = 19 = 7 mod 12, eps = 45
        assert_eq!(s(45), Some(SpecialCaseStatus::Unknown));
        assert_eq!(s(4), None);
    }

    #[test]
    fn table_rows() {
        let rows = heawood_table(&4i64).unwrap();
        let hs: Vec<_> = rows.iter().map(|r| (r.epsilon, r.heawood, r.window.special)).collect();
        assert_eq!(hs, vec![(1, 6, false), (2, 7, false), (3, 7, true), (4, 8, false)]);
        assert_eq!(rows[1].klein_bottle_clique, Some(6));
    }

    #[test]
    fn bigint_genus_window() {
        let i = BigInt::from(10).pow(15);
        let eps = special_genus(&i);
        let w = genus_window(&eps).unwrap();
        assert_eq!(w.i, i);
        assert!(w.special);
        assert_eq!(w.heawood, BigInt::from(3) * &i + 4);
    }
}
