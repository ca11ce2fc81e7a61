//! Exact scalars, weights, roots of `W_n` and `gl(n)`, supports, windows and
//! shadow combinatorics.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar; every coefficient in the crate is one of these.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(s: &Scalar) -> bool {
    s.is_integer()
}

/// Integer value of an integral scalar, if it fits in an `i64`.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    if s.is_integer() {
        s.to_integer().to_i64()
    } else {
        None
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

pub fn fmt_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// `binom(c, i) = c (c-1) ... (c-i+1) / i!` for rational `c`.
pub fn binom(c: &Scalar, i: u32) -> Scalar {
    let mut acc = Scalar::one();
    for t in 0..i {
        acc = acc * (c - int(t as i64)) / int(t as i64 + 1);
    }
    acc
}

/// A weight: the `x_i d_i` eigenvalues, one per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Scalar>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Scalar::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| int(x)).collect())
    }

    /// The basis weight `eps_i` (0-indexed).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.0[i] = Scalar::one();
        w
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> Scalar {
        self.0.iter().fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &Scalar) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

pub fn weight_add(a: &Weight, b: &Weight) -> Result<Weight> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension { expected: a.dim(), got: b.dim() });
    }
    Ok(a + b)
}

/// The root vector `x^alpha d_j` of `W_n`; `j` is 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WnRoot {
    pub alpha: Vec<u32>,
    pub j: usize,
}

impl WnRoot {
    pub fn new(alpha: Vec<u32>, j: usize) -> Self {
        WnRoot { alpha, j }
    }

    /// `d_j`.
    pub fn partial(n: usize, j: usize) -> Self {
        WnRoot { alpha: vec![0; n], j }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// `alpha - eps_j`.
    pub fn weight(&self) -> Weight {
        let mut w: Vec<Scalar> = self.alpha.iter().map(|&a| int(a as i64)).collect();
        w[self.j] -= Scalar::one();
        Weight(w)
    }

    pub fn degree(&self) -> i64 {
        self.alpha.iter().map(|&a| a as i64).sum::<i64>() - 1
    }
}

impl fmt::Display for WnRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &a) in self.alpha.iter().enumerate() {
            match a {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, a)?,
            }
        }
        write!(f, "d{}", self.j + 1)
    }
}

/// Multi-indices in `Z_{>=0}^n` of total degree `d`, lexicographically descending.
pub fn multi_indices(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in multi_indices(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `x^alpha d_j` with `|alpha| - 1 <= max_degree`, ordered by degree, then
/// `j`, then `alpha` ascending.
pub fn wn_roots_up_to(n: usize, max_degree: i64) -> Vec<WnRoot> {
    let mut out = Vec::new();
    if max_degree < -1 {
        return out;
    }
    for d in 0..=(max_degree + 1) as u32 {
        let mut alphas = multi_indices(n, d);
        alphas.reverse();
        for j in 0..n {
            for a in &alphas {
                out.push(WnRoot::new(a.clone(), j));
            }
        }
    }
    out
}

/// The `gl(n)` root `eps_i - eps_j`, 0-indexed, `i != j`.
pub type GlRoot = (usize, usize);

pub fn gl_roots(n: usize) -> Vec<GlRoot> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Four-way partition of the `gl(n)` roots by locally finite / injective action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shadow {
    pub n: usize,
    pub finite: BTreeSet<GlRoot>,
    pub injective: BTreeSet<GlRoot>,
    pub plus: BTreeSet<GlRoot>,
    pub minus: BTreeSet<GlRoot>,
}

impl Shadow {
    /// Shadow of a finite-dimensional module: every root acts locally finitely.
    pub fn all_finite(n: usize) -> Self {
        Shadow {
            n,
            finite: gl_roots(n).into_iter().collect(),
            injective: BTreeSet::new(),
            plus: BTreeSet::new(),
            minus: BTreeSet::new(),
        }
    }

    /// Shadow of the restricted dual: locally nilpotent and injective
    /// directions trade places, so `Plus` and `Minus` swap.
    pub fn negated(&self) -> Shadow {
        Shadow {
            n: self.n,
            finite: self.finite.clone(),
            injective: self.injective.clone(),
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    pub fn is_partition(&self) -> bool {
        let all: BTreeSet<GlRoot> = gl_roots(self.n).into_iter().collect();
        let total = self.finite.len() + self.injective.len() + self.plus.len() + self.minus.len();
        let union: BTreeSet<GlRoot> = self
            .finite
            .iter()
            .chain(&self.injective)
            .chain(&self.plus)
            .chain(&self.minus)
            .copied()
            .collect();
        total == all.len() && union == all
    }
}

/// Which of the three per-coordinate classes a coordinate belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ISet {
    Plus,
    Zero,
    Minus,
}

/// Shadow of a simple weight D-module from its `I^+`, `I^0`, `I^-` sets
/// (0-indexed coordinates).
pub fn shadow_from_isets(
    n: usize,
    i_plus: &BTreeSet<usize>,
    i_zero: &BTreeSet<usize>,
    i_minus: &BTreeSet<usize>,
) -> Result<Shadow> {
    let mut seen = BTreeSet::new();
    for &i in i_plus.iter().chain(i_zero).chain(i_minus) {
        if i >= n || !seen.insert(i) {
            return Err(Error::Validation(format!(
                "I-sets do not partition 1..{n} (index {})",
                i + 1
            )));
        }
    }
    if seen.len() != n {
        return Err(Error::Validation(format!("I-sets do not cover 1..{n}")));
    }
    let mut s = Shadow {
        n,
        finite: BTreeSet::new(),
        injective: BTreeSet::new(),
        plus: BTreeSet::new(),
        minus: BTreeSet::new(),
    };
    for (i, j) in gl_roots(n) {
        let root = (i, j);
        let in_minus = |a: usize, b: usize| {
            (i_plus.contains(&a) && !i_plus.contains(&b))
                || (!i_minus.contains(&a) && i_minus.contains(&b))
        };
        if i_zero.contains(&i) && i_zero.contains(&j) {
            s.injective.insert(root);
        } else if (i_plus.contains(&i) && i_plus.contains(&j))
            || (i_minus.contains(&i) && i_minus.contains(&j))
        {
            s.finite.insert(root);
        } else if in_minus(i, j) {
            s.minus.insert(root);
        } else if in_minus(j, i) {
            s.plus.insert(root);
        } else {
            return Err(Error::Internal(format!("root ({i},{j}) unclassified")));
        }
    }
    Ok(s)
}

/// `(I_P u Minus_P) ⊆ (F_V u Minus_V)`: the finite-multiplicity test for `T(P, V)`.
pub fn finmult_criterion(shadow_p: &Shadow, shadow_v: &Shadow) -> Result<bool> {
    if shadow_p.n != shadow_v.n {
        return Err(Error::Dimension { expected: shadow_p.n, got: shadow_v.n });
    }
    Ok(shadow_p
        .injective
        .iter()
        .chain(&shadow_p.minus)
        .all(|r| shadow_v.finite.contains(r) || shadow_v.minus.contains(r)))
}

/// Per-coordinate shape of a shifted cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    NonNeg,
    NonPos,
    Full,
    Point,
}

impl Mode {
    /// Minkowski sum of the coordinate sets.
    pub fn join(self, other: Mode) -> Mode {
        use Mode::*;
        match (self, other) {
            (Point, m) | (m, Point) => m,
            (Full, _) | (_, Full) => Full,
            (NonNeg, NonNeg) => NonNeg,
            (NonPos, NonPos) => NonPos,
            (NonNeg, NonPos) | (NonPos, NonNeg) => Full,
        }
    }

    pub fn negate(self) -> Mode {
        match self {
            Mode::NonNeg => Mode::NonPos,
            Mode::NonPos => Mode::NonNeg,
            m => m,
        }
    }

    /// Whether `offset` (already known integral for non-point modes) is admissible.
    pub fn admits(self, offset: &Scalar) -> bool {
        match self {
            Mode::Point => offset.is_zero(),
            Mode::Full => offset.is_integer(),
            Mode::NonNeg => offset.is_integer() && !offset.is_negative(),
            Mode::NonPos => offset.is_integer() && !offset.is_positive(),
        }
    }

    /// Integer offsets `t` (as bounds) admissible for this mode; `None` = unbounded.
    fn bounds(self) -> (Option<i64>, Option<i64>) {
        match self {
            Mode::Point => (Some(0), Some(0)),
            Mode::Full => (None, None),
            Mode::NonNeg => (Some(0), None),
            Mode::NonPos => (None, Some(0)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedCone {
    pub base: Weight,
    pub modes: Vec<Mode>,
}

impl ShiftedCone {
    pub fn new(base: Weight, modes: Vec<Mode>) -> Self {
        debug_assert_eq!(base.dim(), modes.len());
        ShiftedCone { base, modes }
    }

    pub fn point(base: Weight) -> Self {
        let n = base.dim();
        ShiftedCone { base, modes: vec![Mode::Point; n] }
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.dim() == self.base.dim()
            && self
                .modes
                .iter()
                .zip(w.0.iter().zip(&self.base.0))
                .all(|(m, (x, b))| m.admits(&(x - b)))
    }

    /// Allowed integer offsets of coordinate `i`, as inclusive bounds.
    pub fn offset_bounds(&self, i: usize) -> (Option<i64>, Option<i64>) {
        self.modes[i].bounds()
    }
}

/// Finite union of shifted cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    pub n: usize,
    pub cones: Vec<ShiftedCone>,
}

impl SupportSet {
    pub fn empty(n: usize) -> Self {
        SupportSet { n, cones: Vec::new() }
    }

    pub fn single(cone: ShiftedCone) -> Self {
        SupportSet { n: cone.base.dim(), cones: vec![cone] }
    }

    pub fn from_points(n: usize, pts: impl IntoIterator<Item = Weight>) -> Self {
        let set: BTreeSet<Weight> = pts.into_iter().collect();
        SupportSet { n, cones: set.into_iter().map(ShiftedCone::point).collect() }
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.cones.iter().any(|c| c.contains(w))
    }

    pub fn negate(&self) -> SupportSet {
        SupportSet {
            n: self.n,
            cones: self
                .cones
                .iter()
                .map(|c| ShiftedCone::new(-&c.base, c.modes.iter().map(|m| m.negate()).collect()))
                .collect(),
        }
    }

    pub fn shift(&self, by: &Weight) -> SupportSet {
        SupportSet {
            n: self.n,
            cones: self
                .cones
                .iter()
                .map(|c| ShiftedCone::new(&c.base + by, c.modes.clone()))
                .collect(),
        }
    }

    /// Removes duplicate cones, keeping a deterministic order.
    pub fn normalized(mut self) -> SupportSet {
        let set: BTreeSet<ShiftedCone> = self.cones.drain(..).collect();
        self.cones = set.into_iter().collect();
        self
    }

    /// All members inside `window`, ordered.
    pub fn enumerate(&self, window: &Window) -> BTreeSet<Weight> {
        let mut out = BTreeSet::new();
        for cone in &self.cones {
            let mut ranges: Vec<Vec<Scalar>> = Vec::with_capacity(self.n);
            for i in 0..self.n {
                let (lo, hi) = cone.offset_bounds(i);
                let b = &cone.base.0[i];
                let wlo = ceil_i64(&(&window.lo[i] - b));
                let whi = floor_i64(&(&window.hi[i] - b));
                let lo = lo.map_or(wlo, |l| l.max(wlo));
                let hi = hi.map_or(whi, |h| h.min(whi));
                ranges.push((lo..=hi).map(|t| b + int(t)).collect());
            }
            for w in cartesian(&ranges) {
                out.insert(Weight(w));
            }
        }
        out
    }
}

/// Exact Minkowski sum of two supports via the mode-join table.
pub fn support_sum(a: &SupportSet, b: &SupportSet) -> Result<SupportSet> {
    if a.n != b.n {
        return Err(Error::Dimension { expected: a.n, got: b.n });
    }
    let mut cones = Vec::new();
    for ca in &a.cones {
        for cb in &b.cones {
            cones.push(ShiftedCone::new(
                &ca.base + &cb.base,
                ca.modes.iter().zip(&cb.modes).map(|(x, y)| x.join(*y)).collect(),
            ));
        }
    }
    Ok(SupportSet { n: a.n, cones }.normalized())
}

pub fn support_contains(s: &SupportSet, w: &Weight) -> bool {
    s.contains(w)
}

pub fn floor_i64(s: &Scalar) -> i64 {
    s.floor().to_integer().to_i64().expect("window bound fits in i64")
}

pub fn ceil_i64(s: &Scalar) -> i64 {
    s.ceil().to_integer().to_i64().expect("window bound fits in i64")
}

pub fn cartesian<T: Clone>(ranges: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for r in ranges {
        let mut next = Vec::with_capacity(out.len() * r.len());
        for prefix in &out {
            for x in r {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// A finite box of weights used to truncate infinite-dimensional modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: Vec<Scalar>,
    pub hi: Vec<Scalar>,
    pub margin: u32,
}

impl Window {
    pub fn new(lo: Vec<Scalar>, hi: Vec<Scalar>, margin: u32) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::Dimension { expected: lo.len(), got: hi.len() });
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::Validation("window with lo > hi".into()));
        }
        Ok(Window { lo, hi, margin })
    }

    /// The box `[-r, r]^n`.
    pub fn radius(n: usize, r: i64) -> Self {
        Window { lo: vec![int(-r); n], hi: vec![int(r); n], margin: 0 }
    }

    pub fn with_margin(mut self, margin: u32) -> Self {
        self.margin = margin;
        self
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.dim() == self.dim()
            && w.0
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (l, h))| l <= x && x <= h)
    }

    /// The window shrunk by `margin` on every side (empty intervals collapse to
    /// a window that contains nothing).
    pub fn interior(&self) -> Window {
        let m = int(self.margin as i64);
        Window {
            lo: self.lo.iter().map(|l| l + &m).collect(),
            hi: self.hi.iter().map(|h| h - &m).collect(),
            margin: 0,
        }
    }

    /// Points of the coset `base + Z^n` inside the window.
    pub fn coset_points(&self, base: &Weight) -> Vec<Weight> {
        let cone = ShiftedCone::new(base.clone(), vec![Mode::Full; base.dim()]);
        SupportSet::single(cone).enumerate(self).into_iter().collect()
    }

    /// Integer range of `t` with `lo_i <= offset + t <= hi_i`.
    pub fn int_range(&self, i: usize, offset: &Scalar) -> std::ops::RangeInclusive<i64> {
        ceil_i64(&(&self.lo[i] - offset))..=floor_i64(&(&self.hi[i] - offset))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn weight_add_examples() {
        let a = Weight::from_ints(&[1, 2]);
        let b = Weight::from_ints(&[0, -1]);
        assert_eq!(weight_add(&a, &b).unwrap(), Weight::from_ints(&[1, 1]));
        assert_eq!(weight_add(&a, &Weight::zero(2)).unwrap(), a);
        let c = Weight(vec![frac(1, 2), int(0)]);
        let d = Weight(vec![int(0), frac(1, 3)]);
        assert_eq!(weight_add(&c, &d).unwrap(), Weight(vec![frac(1, 2), frac(1, 3)]));
        assert!(matches!(
            weight_add(&a, &Weight::zero(3)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn roots_enumeration() {
        let r = wn_roots_up_to(1, 0);
        assert_eq!(r, vec![WnRoot::new(vec![0], 0), WnRoot::new(vec![1], 0)]);
        let r = wn_roots_up_to(2, -1);
        assert_eq!(r, vec![WnRoot::partial(2, 0), WnRoot::partial(2, 1)]);
        let r = wn_roots_up_to(1, 1);
        assert_eq!(r.len(), 3);
        assert_eq!(r[2], WnRoot::new(vec![2], 0));
        assert_eq!(r[2].weight(), Weight::from_ints(&[1]));
        assert_eq!(r[2].degree(), 1);
    }

    #[test]
    fn shadow_examples() {
        // n=4, I+={1,3}, I-={2,4}
        let s = shadow_from_isets(4, &set(&[0, 2]), &set(&[]), &set(&[1, 3])).unwrap();
        assert!(s.minus.contains(&(0, 3)));
        assert!(s.is_partition());

        let s = shadow_from_isets(2, &set(&[]), &set(&[0, 1]), &set(&[])).unwrap();
        assert_eq!(s.injective.len(), 2);
        assert!(s.finite.is_empty() && s.plus.is_empty() && s.minus.is_empty());

        let s = shadow_from_isets(2, &set(&[1]), &set(&[]), &set(&[0])).unwrap();
        assert_eq!(s.minus, [(1, 0)].into_iter().collect());
        assert_eq!(s.plus, [(0, 1)].into_iter().collect());

        assert!(shadow_from_isets(2, &set(&[0]), &set(&[0]), &set(&[1])).is_err());
        assert!(shadow_from_isets(2, &set(&[0]), &set(&[]), &set(&[])).is_err());
    }

    #[test]
    fn criterion_examples() {
        let p = shadow_from_isets(4, &set(&[0, 2]), &set(&[]), &set(&[1, 3])).unwrap();
        // A V with eps_1 - eps_4 in Plus.
        let mut v = Shadow::all_finite(4);
        v.finite.remove(&(0, 3));
        v.finite.remove(&(3, 0));
        v.plus.insert((0, 3));
        v.minus.insert((3, 0));
        assert!(!finmult_criterion(&p, &v).unwrap());
        assert!(finmult_criterion(&p, &Shadow::all_finite(4)).unwrap());

        let p = shadow_from_isets(2, &set(&[1]), &set(&[]), &set(&[0])).unwrap();
        let v = shadow_from_isets(2, &set(&[1]), &set(&[]), &set(&[0])).unwrap();
        assert!(finmult_criterion(&p, &v).unwrap());
    }

    #[test]
    fn support_examples() {
        let quad = SupportSet::single(ShiftedCone::new(Weight::zero(2), vec![Mode::NonNeg; 2]));
        let units = SupportSet::from_points(2, [Weight::unit(2, 0), Weight::unit(2, 1)]);
        let sum = support_sum(&quad, &units).unwrap();
        let w = Window::radius(2, 6);
        let expected: BTreeSet<Weight> = w
            .coset_points(&Weight::zero(2))
            .into_iter()
            .filter(|p| {
                let a = to_i64(&p.0[0]).unwrap();
                let b = to_i64(&p.0[1]).unwrap();
                a >= 0 && b >= 0 && a + b >= 1
            })
            .collect();
        assert_eq!(sum.enumerate(&w), expected);

        let origin = SupportSet::from_points(2, [Weight::zero(2)]);
        assert_eq!(support_sum(&quad, &origin).unwrap().enumerate(&w), quad.enumerate(&w));

        let half = SupportSet::single(ShiftedCone::new(Weight(vec![frac(1, 2)]), vec![Mode::Full]));
        let ray = SupportSet::single(ShiftedCone::new(Weight::zero(1), vec![Mode::NonNeg]));
        let w1 = Window::radius(1, 6);
        assert_eq!(support_sum(&half, &ray).unwrap().enumerate(&w1), half.enumerate(&w1));
    }

    #[test]
    fn contains_examples() {
        let ray = SupportSet::single(ShiftedCone::new(Weight::zero(1), vec![Mode::NonNeg]));
        assert!(ray.contains(&Weight::from_ints(&[3])));
        assert!(!ray.contains(&Weight::from_ints(&[-1])));
        let half = SupportSet::single(ShiftedCone::new(Weight(vec![frac(1, 2)]), vec![Mode::Full]));
        assert!(!half.contains(&Weight::from_ints(&[0])));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(&int(5), 2), int(10));
        assert_eq!(binom(&frac(1, 2), 2), frac(-1, 8));
        assert_eq!(binom(&int(-1), 3), int(-1));
        assert_eq!(binom(&int(2), 3), int(0));
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("1/2"), Some(frac(1, 2)));
        assert_eq!(parse_scalar("-3"), Some(int(-3)));
        assert_eq!(parse_scalar("2/4"), Some(frac(1, 2)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
    }
}
