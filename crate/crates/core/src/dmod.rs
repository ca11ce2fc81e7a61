//! Simple weight modules over the Weyl algebra `D_n`.
//!
//! A module is a tensor product of one-variable factors. Each factor has a
//! monomial basis `e(k)` indexed by an integer label, and every generator `x_i`,
//! `d_i` maps a basis vector to a scalar multiple of a single basis vector:
//!
//! | factor            | labels | `x e(k)`         | `d e(k)`              | weight       |
//! |-------------------|--------|------------------|-----------------------|--------------|
//! | `O`   (`C[x]`)    | `k>=0` | `e(k+1)`         | `k e(k-1)`            | `k`          |
//! | `OF`  (Fourier)   | `k>=0` | `-k e(k-1)`      | `e(k+1)`              | `-k-1`       |
//! | `XL(l)` (`x^l C[x^±]`) | `Z` | `e(k+1)`       | `(l+k) e(k-1)`        | `l+k`        |
//!
//! A module may also carry a power of the Fourier automorphism
//! `x -> d, d -> -x`; a module twisted `p` times lets `u` act as `sigma^p(u)`
//! on the untwisted basis (this is the `f(mu)` basis used for the duality
//! pairing).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    ceil_i64, floor_i64, fmt_scalar, int, shadow_from_isets, to_i64, Mode, Scalar, Shadow,
    ShiftedCone, SupportSet, Weight, Window,
};
use crate::linalg::Vector;

/// Basis label `e(mu)`: one integer per coordinate.
pub type Label = Vec<i64>;

/// Finite linear combination of basis vectors `e(mu)`.
pub type DVector = Vector<Label>;

/// Kind of a one-variable simple weight `D_1`-module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DFactor {
    /// `O_1 = C[x]`.
    Poly,
    /// `O_1^F`.
    FPoly,
    /// `x^lambda C[x^±]`; simple only for non-integral `lambda`.
    Laurent(Scalar),
}

impl DFactor {
    pub fn is_simple(&self) -> bool {
        match self {
            DFactor::Laurent(l) => !l.is_integer(),
            _ => true,
        }
    }

    pub fn line(&self) -> Line {
        match self {
            DFactor::Poly => Line::Poly,
            DFactor::FPoly => Line::FPoly,
            DFactor::Laurent(l) => Line::XShift(l.clone()),
        }
    }
}

impl fmt::Display for DFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DFactor::Poly => write!(f, "O"),
            DFactor::FPoly => write!(f, "OF"),
            DFactor::Laurent(l) => write!(f, "XL({})", fmt_scalar(l)),
        }
    }
}

/// Weyl algebra generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    D,
}

/// Concrete one-variable action model. Besides the three simple kinds this
/// includes the `d`-localized model `DShift`, where `d` acts by shifting.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Line {
    Poly,
    FPoly,
    /// `x e(k) = e(k+1)`, `d e(k) = (l+k) e(k-1)`, weight `l+k`, `k` in `Z`.
    XShift(Scalar),
    /// `d g(k) = g(k+1)`, `x g(k) = -(k+nu) g(k-1)`, weight `-k-1-nu`, `k` in `Z`.
    DShift(Scalar),
}

impl Line {
    pub fn valid(&self, k: i64) -> bool {
        match self {
            Line::Poly | Line::FPoly => k >= 0,
            _ => true,
        }
    }

    pub fn weight(&self, k: i64) -> Scalar {
        match self {
            Line::Poly => int(k),
            Line::FPoly => int(-k - 1),
            Line::XShift(l) => l + int(k),
            Line::DShift(nu) => int(-k - 1) - nu,
        }
    }

    /// Label of the given weight, if it lies in the support.
    pub fn label_of(&self, w: &Scalar) -> Option<i64> {
        let k = match self {
            Line::Poly => to_i64(w)?,
            Line::FPoly => to_i64(&(-w - int(1)))?,
            Line::XShift(l) => to_i64(&(w - l))?,
            Line::DShift(nu) => to_i64(&(-w - int(1) - nu))?,
        };
        self.valid(k).then_some(k)
    }

    /// Labels whose weight lies in `[lo, hi]`.
    pub fn labels_between(&self, lo: &Scalar, hi: &Scalar) -> Vec<i64> {
        let (a, b) = match self {
            Line::Poly => (ceil_i64(lo).max(0), floor_i64(hi)),
            Line::FPoly => (ceil_i64(&(-hi - int(1))).max(0), floor_i64(&(-lo - int(1)))),
            Line::XShift(l) => (ceil_i64(&(lo - l)), floor_i64(&(hi - l))),
            Line::DShift(nu) => (ceil_i64(&(-hi - int(1) - nu)), floor_i64(&(-lo - int(1) - nu))),
        };
        (a..=b).collect()
    }

    pub fn act(&self, g: Gen, k: i64) -> Option<(i64, Scalar)> {
        let (to, c) = match (self, g) {
            (Line::Poly, Gen::X) | (Line::XShift(_), Gen::X) => (k + 1, int(1)),
            (Line::Poly, Gen::D) => (k - 1, int(k)),
            (Line::XShift(l), Gen::D) => (k - 1, l + int(k)),
            (Line::FPoly, Gen::D) | (Line::DShift(_), Gen::D) => (k + 1, int(1)),
            (Line::FPoly, Gen::X) => (k - 1, int(-k)),
            (Line::DShift(nu), Gen::X) => (k - 1, -(nu + int(k))),
        };
        (!c.is_zero() && self.valid(to)).then_some((to, c))
    }

    pub fn support_mode(&self) -> Mode {
        match self {
            Line::Poly => Mode::NonNeg,
            Line::FPoly => Mode::NonPos,
            _ => Mode::Full,
        }
    }

    /// Whether `g` maps the factor onto itself.
    pub fn surjective(&self, g: Gen) -> bool {
        match (self, g) {
            (Line::Poly, Gen::D) | (Line::FPoly, Gen::X) => true,
            (Line::Poly, Gen::X) | (Line::FPoly, Gen::D) => false,
            (Line::XShift(_), Gen::X) | (Line::DShift(_), Gen::D) => true,
            (Line::XShift(l), Gen::D) => !l.is_integer(),
            (Line::DShift(nu), Gen::X) => !nu.is_integer(),
        }
    }
}

/// Image of a generator under `sigma_F^p`, as (generator, sign).
pub fn fourier_gen(p: u8, g: Gen) -> (Gen, i64) {
    match (p % 4, g) {
        (0, g) => (g, 1),
        (1, Gen::X) => (Gen::D, 1),
        (1, Gen::D) => (Gen::X, -1),
        (2, g) => (g, -1),
        (3, Gen::X) => (Gen::D, -1),
        (3, Gen::D) => (Gen::X, 1),
        _ => unreachable!(),
    }
}

/// Anything on which the Weyl algebra acts through single-term generator moves.
pub trait WeylAction {
    fn n(&self) -> usize;
    fn valid(&self, label: &Label) -> bool;
    fn weight(&self, label: &Label) -> Weight;
    fn act_gen(&self, i: usize, g: Gen, label: &Label) -> Option<(Label, Scalar)>;

    /// Apply a Weyl algebra element to a vector.
    fn act_weyl(&self, u: &WeylElement, v: &DVector) -> DVector {
        let mut out = DVector::new();
        for ((a, b), c) in u.terms.iter() {
            for (label, coeff) in v.iter() {
                if let Some((l, s)) = self.act_monomial(a, b, label) {
                    out.add_term(l, s * c * coeff);
                }
            }
        }
        out
    }

    /// `x^a d^b e(label)`: all derivatives first, then multiplications.
    fn act_monomial(&self, a: &[u32], b: &[u32], label: &Label) -> Option<(Label, Scalar)> {
        let mut l = label.clone();
        let mut c = Scalar::one();
        for (i, &e) in b.iter().enumerate() {
            for _ in 0..e {
                let (nl, s) = self.act_gen(i, Gen::D, &l)?;
                l = nl;
                c *= s;
            }
        }
        for (i, &e) in a.iter().enumerate() {
            for _ in 0..e {
                let (nl, s) = self.act_gen(i, Gen::X, &l)?;
                l = nl;
                c *= s;
            }
        }
        Some((l, c))
    }
}

/// A weight `D_n`-module presented by concrete one-variable action models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineModule {
    pub lines: Vec<Line>,
    pub fourier: u8,
}

impl LineModule {
    pub fn labels_in(&self, window: &Window) -> Vec<Label> {
        labels_in_box(&self.lines, self.fourier, window)
    }
}

impl WeylAction for LineModule {
    fn n(&self) -> usize {
        self.lines.len()
    }

    fn valid(&self, label: &Label) -> bool {
        label.len() == self.lines.len() && self.lines.iter().zip(label).all(|(l, &k)| l.valid(k))
    }

    fn weight(&self, label: &Label) -> Weight {
        line_weight(&self.lines, self.fourier, label)
    }

    fn act_gen(&self, i: usize, g: Gen, label: &Label) -> Option<(Label, Scalar)> {
        line_act(&self.lines, self.fourier, i, g, label)
    }
}

fn line_weight(lines: &[Line], fourier: u8, label: &Label) -> Weight {
    Weight(
        lines
            .iter()
            .zip(label)
            .map(|(l, &k)| {
                let w = l.weight(k);
                if fourier.is_multiple_of(2) {
                    w
                } else {
                    -w - int(1)
                }
            })
            .collect(),
    )
}

fn line_act(lines: &[Line], fourier: u8, i: usize, g: Gen, label: &Label) -> Option<(Label, Scalar)> {
    let (g, sign) = fourier_gen(fourier, g);
    let (k, c) = lines[i].act(g, label[i])?;
    let mut l = label.clone();
    l[i] = k;
    Some((l, c * int(sign)))
}

fn labels_in_box(lines: &[Line], fourier: u8, window: &Window) -> Vec<Label> {
    let ranges: Vec<Vec<i64>> = lines
        .iter()
        .enumerate()
        .map(|(i, l)| {
            if fourier.is_multiple_of(2) {
                l.labels_between(&window.lo[i], &window.hi[i])
            } else {
                l.labels_between(&(-&window.hi[i] - int(1)), &(-&window.lo[i] - int(1)))
            }
        })
        .collect();
    crate::lattice::cartesian(&ranges)
}

/// A weight `D_n`-module given as a tensor product of one-variable factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DModule {
    pub factors: Vec<DFactor>,
    /// Power of the Fourier twist (mod 4).
    pub fourier: u8,
}

impl DModule {
    pub fn new(factors: Vec<DFactor>) -> Self {
        DModule { factors, fourier: 0 }
    }

    /// `O_n`.
    pub fn polynomial(n: usize) -> Self {
        DModule::new(vec![DFactor::Poly; n])
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.iter().all(DFactor::is_simple)
    }

    pub fn lines(&self) -> Vec<Line> {
        self.factors.iter().map(DFactor::line).collect()
    }

    pub fn line_module(&self) -> LineModule {
        LineModule { lines: self.lines(), fourier: self.fourier }
    }

    pub fn is_polynomial(&self) -> bool {
        self.fourier == 0 && self.factors.iter().all(|f| *f == DFactor::Poly)
    }

    /// `(I^+, I^0, I^-)` as 0-indexed coordinate sets.
    pub fn isets(&self) -> (BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>) {
        let mut plus = BTreeSet::new();
        let mut zero = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for (i, f) in self.factors.iter().enumerate() {
            let kind = match (f, self.fourier % 2) {
                (DFactor::Laurent(_), _) => &mut zero,
                (DFactor::Poly, 0) | (DFactor::FPoly, 1) => &mut plus,
                _ => &mut minus,
            };
            kind.insert(i);
        }
        (plus, zero, minus)
    }

    pub fn check_label(&self, label: &Label) -> Result<()> {
        if self.valid(label) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{label:?}")))
        }
    }

    /// Weight of `e(mu)`.
    pub fn dmod_weight(&self, label: &Label) -> Result<Weight> {
        self.check_label(label)?;
        Ok(self.weight(label))
    }

    /// Label of the unique basis vector of weight `w`, if `w` is in the support.
    pub fn label_of_weight(&self, w: &Weight) -> Option<Label> {
        if w.dim() != self.n() {
            return None;
        }
        self.factors
            .iter()
            .zip(&w.0)
            .map(|(f, x)| {
                let x = if self.fourier.is_multiple_of(2) { x.clone() } else { -x - int(1) };
                f.line().label_of(&x)
            })
            .collect()
    }

    /// The exact support: one shifted cone.
    pub fn support(&self) -> SupportSet {
        let zero: Label = vec![0; self.n()];
        let modes = self
            .lines()
            .iter()
            .map(|l| {
                let m = l.support_mode();
                if self.fourier.is_multiple_of(2) {
                    m
                } else {
                    m.negate()
                }
            })
            .collect();
        SupportSet::single(ShiftedCone::new(self.weight(&zero), modes))
    }

    /// Basis labels whose weight lies in the window.
    pub fn labels_in(&self, window: &Window) -> Vec<Label> {
        labels_in_box(&self.lines(), self.fourier, window)
    }

    /// The module `P^F` in the swapped-kind presentation:
    /// `O <-> OF`, `XL(l) -> XL(-l-1)`.
    pub fn fourier(&self) -> DModule {
        DModule {
            factors: self
                .factors
                .iter()
                .map(|f| match f {
                    DFactor::Poly => DFactor::FPoly,
                    DFactor::FPoly => DFactor::Poly,
                    DFactor::Laurent(l) => DFactor::Laurent(-l - int(1)),
                })
                .collect(),
            fourier: self.fourier,
        }
    }

    /// The module twisted once more by `sigma_F`, on the same basis (the
    /// `f(mu)` basis).
    pub fn fourier_twist(&self) -> DModule {
        DModule { factors: self.factors.clone(), fourier: (self.fourier + 1) % 4 }
    }

    /// Isomorphism from the twisted `f(mu)` basis of `P.fourier_twist()` onto
    /// the basis of `P.fourier()` (untwisted `P` only): `f(mu) -> c e'(mu')`.
    pub fn fourier_label_map(&self, label: &Label) -> Result<(Label, Scalar)> {
        if self.fourier != 0 {
            return Err(Error::Unsupported("label map of an already twisted module".into()));
        }
        self.check_label(label)?;
        let mut out = Vec::with_capacity(self.n());
        let mut c = Scalar::one();
        for (f, &k) in self.factors.iter().zip(label) {
            match f {
                DFactor::Poly => {
                    out.push(k);
                    if k % 2 != 0 {
                        c = -c;
                    }
                }
                DFactor::FPoly => out.push(k),
                DFactor::Laurent(l) => {
                    out.push(-k);
                    if k > 0 {
                        for t in 1..=k {
                            c *= l + int(t);
                        }
                    } else {
                        for t in (k + 1)..=0 {
                            c /= l + int(t);
                        }
                    }
                }
            }
        }
        Ok((out, c))
    }

    pub fn shadow(&self) -> Result<Shadow> {
        if !self.is_simple() {
            return Err(Error::Validation(format!("{self} is not simple")));
        }
        let (p, z, m) = self.isets();
        shadow_from_isets(self.n(), &p, &z, &m)
    }

    /// Whether `sum_i d_i P = P`.
    pub fn sum_partials_saturates(&self) -> bool {
        self.lines().iter().any(|l| {
            let (g, _) = fourier_gen(self.fourier, Gen::D);
            l.surjective(g)
        })
    }
}

impl WeylAction for DModule {
    fn n(&self) -> usize {
        self.factors.len()
    }

    fn valid(&self, label: &Label) -> bool {
        label.len() == self.n() && self.factors.iter().zip(label).all(|(f, &k)| f.line().valid(k))
    }

    fn weight(&self, label: &Label) -> Weight {
        line_weight(&self.lines(), self.fourier, label)
    }

    fn act_gen(&self, i: usize, g: Gen, label: &Label) -> Option<(Label, Scalar)> {
        let (g, sign) = fourier_gen(self.fourier, g);
        let (k, c) = self.factors[i].line().act(g, label[i])?;
        let mut l = label.clone();
        l[i] = k;
        Some((l, c * int(sign)))
    }
}

impl fmt::Display for DModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.factors.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("*");
        match self.fourier {
            0 => write!(f, "{body}"),
            p => write!(f, "({body})^F{p}"),
        }
    }
}

pub fn dmod_weight(p: &DModule, label: &Label) -> Result<Weight> {
    p.dmod_weight(label)
}

pub fn dmod_support(p: &DModule) -> SupportSet {
    p.support()
}

pub fn act_weyl(p: &DModule, u: &WeylElement, v: &DVector) -> DVector {
    p.act_weyl(u, v)
}

pub fn fourier(p: &DModule) -> DModule {
    p.fourier()
}

pub fn dmod_shadow(p: &DModule) -> Result<Shadow> {
    p.shadow()
}

/// The `gl(n)`-module on the `kappa`-eigenspace of `sum x_i d_i`, `E_ij = x_i d_j`.
pub fn restrict_kappa(p: &DModule, kappa: &Scalar) -> Result<crate::glmod::GlModule> {
    crate::glmod::GlModule::restriction(p, kappa)
}

pub fn sum_partials_saturates(p: &DModule) -> bool {
    p.sum_partials_saturates()
}

/// Monomial key `x^a d^b` of a normal-ordered Weyl algebra element.
pub type WeylMonomial = (Vec<u32>, Vec<u32>);

/// Element of the Weyl algebra in normal order (all `x` left of all `d`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylElement {
    pub n: usize,
    pub terms: Vector<WeylMonomial>,
}

impl WeylElement {
    pub fn zero(n: usize) -> Self {
        WeylElement { n, terms: Vector::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], vec![0; n], int(1))
    }

    pub fn monomial(a: Vec<u32>, b: Vec<u32>, c: Scalar) -> Self {
        let n = a.len();
        WeylElement { n, terms: Vector::from_terms([((a, b), c)]) }
    }

    pub fn x(n: usize, i: usize) -> Self {
        let mut a = vec![0; n];
        a[i] = 1;
        Self::monomial(a, vec![0; n], int(1))
    }

    pub fn d(n: usize, i: usize) -> Self {
        let mut b = vec![0; n];
        b[i] = 1;
        Self::monomial(vec![0; n], b, int(1))
    }

    pub fn gen(n: usize, i: usize, g: Gen) -> Self {
        match g {
            Gen::X => Self::x(n, i),
            Gen::D => Self::d(n, i),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn plus(&self, other: &WeylElement) -> WeylElement {
        let mut t = self.terms.clone();
        t.add(&other.terms);
        WeylElement { n: self.n, terms: t }
    }

    pub fn minus(&self, other: &WeylElement) -> WeylElement {
        let mut t = self.terms.clone();
        t.sub(&other.terms);
        WeylElement { n: self.n, terms: t }
    }

    pub fn scale(&self, c: &Scalar) -> WeylElement {
        WeylElement { n: self.n, terms: self.terms.scaled(c) }
    }

    /// Product in normal order, using `d^b x^c = sum_k C(b,k) c!/(c-k)! x^(c-k) d^(b-k)`
    /// coordinate-wise (the closed form of repeated `d x = x d + 1` rewriting).
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut out = Vector::new();
        for ((a, b), c1) in self.terms.iter() {
            for ((c, d), c2) in other.terms.iter() {
                // Per coordinate: list of (x power, d power, coefficient).
                let mut partial: Vec<(Vec<u32>, Vec<u32>, Scalar)> =
                    vec![(Vec::with_capacity(n), Vec::with_capacity(n), c1 * c2)];
                for i in 0..n {
                    let (bi, ci) = (b[i], c[i]);
                    let mut next = Vec::new();
                    for k in 0..=bi.min(ci) {
                        let coef = binom_u(bi, k) * falling(ci, k);
                        for (xa, xb, s) in &partial {
                            let mut xa = xa.clone();
                            let mut xb = xb.clone();
                            xa.push(a[i] + ci - k);
                            xb.push(bi - k + d[i]);
                            next.push((xa, xb, s * int(coef as i64)));
                        }
                    }
                    partial = next;
                }
                for (xa, xb, s) in partial {
                    out.add_term((xa, xb), s);
                }
            }
        }
        WeylElement { n, terms: out }
    }

    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        self.mul(other).minus(&other.mul(self))
    }

    /// Reference normal ordering by literal rewriting of words; used to check `mul`.
    pub fn from_word(n: usize, word: &[(usize, Gen)]) -> WeylElement {
        word.iter().fold(WeylElement::one(n), |acc, &(i, g)| acc.mul(&WeylElement::gen(n, i, g)))
    }

    /// Image under `sigma_F^p`.
    pub fn fourier_image(&self, p: u8) -> WeylElement {
        let n = self.n;
        let mut out = WeylElement::zero(n);
        for ((a, b), c) in self.terms.iter() {
            let mut term = WeylElement::one(n).scale(c);
            for (i, &e) in a.iter().enumerate() {
                let (g, s) = fourier_gen(p, Gen::X);
                for _ in 0..e {
                    term = term.mul(&WeylElement::gen(n, i, g).scale(&int(s)));
                }
            }
            for (i, &e) in b.iter().enumerate() {
                let (g, s) = fourier_gen(p, Gen::D);
                for _ in 0..e {
                    term = term.mul(&WeylElement::gen(n, i, g).scale(&int(s)));
                }
            }
            out = out.plus(&term);
        }
        out
    }

    /// Weight `a - b` of a homogeneous monomial.
    pub fn monomial_weight((a, b): &WeylMonomial) -> Weight {
        Weight(a.iter().zip(b).map(|(&x, &y)| int(x as i64 - y as i64)).collect())
    }
}

fn binom_u(n: u32, k: u32) -> u64 {
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

fn falling(n: u32, k: u32) -> u64 {
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64)
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in a.iter().enumerate() {
                if e > 0 {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
            }
            for (i, &e) in b.iter().enumerate() {
                if e > 0 {
                    write!(f, "d{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Weights of all nonzero weight vectors of `p` in `window`, by brute force over
/// labels. Used as an independent check on `support`.
pub fn enumerate_support(p: &DModule, window: &Window) -> BTreeSet<Weight> {
    p.labels_in(window).iter().map(|l| p.weight(l)).filter(|w| window.contains(w)).collect()
}

/// Per-weight multiplicities inside `window`.
pub fn multiplicities(p: &DModule, window: &Window) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for l in p.labels_in(window) {
        *out.entry(p.weight(&l)).or_insert(0) += 1;
    }
    out
}

/// Sign automorphism `x -> -x, d -> -d` applied to a Weyl element.
pub fn sign_automorphism(u: &WeylElement) -> WeylElement {
    let mut out = Vector::new();
    for ((a, b), c) in u.terms.iter() {
        let deg: u32 = a.iter().sum::<u32>() + b.iter().sum::<u32>();
        let s = if deg.is_multiple_of(2) { c.clone() } else { -c };
        out.add_term((a.clone(), b.clone()), s);
    }
    WeylElement { n: u.n, terms: out }
}
