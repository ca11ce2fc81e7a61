//! Ore localization and twisted localization at a coordinate element `x_i` or `d_i`.
//!
//! Localized and twisted modules stay inside the one-variable line models:
//! localizing at `x` gives `XShift(l)` (`x` acts by shifting), localizing at
//! `d` gives `DShift(nu)` (`d` acts by shifting). Twisting by `a^c` moves the
//! parameter: `XShift(l) -> XShift(l + c)`, `DShift(nu) -> DShift(nu + c)`,
//! with `a^c e(k)` identified with `e(k)` of the twisted line.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::dmod::{DFactor, DModule, DVector, Gen, Label, Line, LineModule, WeylAction, WeylElement};
use crate::error::{Error, Result};
use crate::lattice::{binom, fmt_scalar, int, Scalar};
use crate::linalg::random_combination;

/// Localizing element `a` (coordinate `i`, generator) and twist exponent `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    pub i: usize,
    pub elem: Gen,
    pub c: Scalar,
}

impl TwistData {
    pub fn new(i: usize, elem: Gen, c: Scalar) -> Self {
        TwistData { i, elem, c }
    }

    pub fn element(&self, n: usize) -> WeylElement {
        WeylElement::gen(n, self.i, self.elem)
    }
}

/// `sum_k coeff_k a^(-k)` in the localized Weyl algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedElement {
    pub i: usize,
    pub elem: Gen,
    pub terms: Vec<(WeylElement, u32)>,
}

impl LocalizedElement {
    /// Applies the element to a vector of a module on which `a` is invertible.
    pub fn act(&self, m: &LineModule, v: &DVector) -> Result<DVector> {
        let mut out = DVector::new();
        for (coeff, k) in &self.terms {
            let mut w = v.clone();
            for _ in 0..*k {
                w = apply_inverse(m, self.i, self.elem, &w)?;
            }
            out.add(&m.act_weyl(coeff, &w));
        }
        Ok(out)
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match self.elem {
            Gen::X => format!("x{}", self.i + 1),
            Gen::D => format!("d{}", self.i + 1),
        };
        let parts: Vec<String> = self.terms.iter().map(|(c, k)| format!("[{c}] {a}^-{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `ad(a)(u) = a u - u a`.
pub fn ad(a: &WeylElement, u: &WeylElement) -> WeylElement {
    a.commutator(u)
}

/// `phi_c(u) = sum_k binom(c, k) ad(a)^k(u) a^(-k)`.
pub fn phi(u: &WeylElement, t: &TwistData, max_order: u32) -> Result<LocalizedElement> {
    phi_with(u, t.i, t.elem, &t.c, max_order)
}

fn phi_with(u: &WeylElement, i: usize, elem: Gen, c: &Scalar, max_order: u32) -> Result<LocalizedElement> {
    let a = WeylElement::gen(u.n, i, elem);
    let mut terms = Vec::new();
    let mut cur = u.clone();
    for k in 0..=max_order {
        if cur.is_zero() {
            return Ok(LocalizedElement { i, elem, terms });
        }
        let b = binom(c, k);
        if !b.is_zero() {
            terms.push((cur.scale(&b), k));
        }
        cur = ad(&a, &cur);
    }
    if cur.is_zero() {
        Ok(LocalizedElement { i, elem, terms })
    } else {
        Err(Error::Internal(format!("ad-series of {u} does not terminate by order {max_order}")))
    }
}

/// `a^(-1)` on a single basis vector.
fn inverse_gen(m: &LineModule, i: usize, g: Gen, label: &Label) -> Result<(Label, Scalar)> {
    if m.fourier != 0 {
        return Err(Error::Unsupported("inverse in a Fourier-twisted model".into()));
    }
    let ok = matches!((&m.lines[i], g), (Line::XShift(_), Gen::X) | (Line::DShift(_), Gen::D));
    if !ok {
        return Err(Error::NotOreInjective(format!("{g:?}{} on {:?}", i + 1, m.lines[i])));
    }
    let mut l = label.clone();
    l[i] -= 1;
    Ok((l, Scalar::one()))
}

fn apply_inverse(m: &LineModule, i: usize, g: Gen, v: &DVector) -> Result<DVector> {
    let mut out = DVector::new();
    for (l, c) in v.iter() {
        let (l2, s) = inverse_gen(m, i, g, l)?;
        out.add_term(l2, s * c);
    }
    Ok(out)
}

/// Result of a (twisted) localization in its native line model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localized {
    pub module: LineModule,
}

impl Localized {
    pub fn nonsimple(&self) -> bool {
        self.module.lines.iter().any(|l| match l {
            Line::XShift(a) | Line::DShift(a) => a.is_integer(),
            _ => false,
        })
    }

    /// The same module in the `D`-module factor family, when it has a
    /// presentation there (`DShift(nu)` with integral `nu` has none).
    pub fn as_dmodule(&self) -> Option<DModule> {
        let factors = self
            .module
            .lines
            .iter()
            .map(|l| match l {
                Line::Poly => Some(DFactor::Poly),
                Line::FPoly => Some(DFactor::FPoly),
                Line::XShift(a) => Some(DFactor::Laurent(a.clone())),
                Line::DShift(nu) if !nu.is_integer() => Some(DFactor::Laurent(-nu - int(1))),
                Line::DShift(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(DModule::new(factors))
    }
}

impl fmt::Display for Localized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_dmodule() {
            return write!(f, "{p}");
        }
        let parts: Vec<String> = self
            .module
            .lines
            .iter()
            .map(|l| match l {
                Line::Poly => "O".to_string(),
                Line::FPoly => "OF".to_string(),
                Line::XShift(a) => format!("XL({})", fmt_scalar(a)),
                Line::DShift(nu) => format!("DL({})", fmt_scalar(nu)),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `D_<a> M`: the Ore localization, with `a` acting by a shift on coordinate `i`.
pub fn localize(m: &LineModule, i: usize, elem: Gen) -> Result<LineModule> {
    if m.fourier != 0 {
        return Err(Error::Unsupported("localization of a Fourier-twisted model".into()));
    }
    if i >= m.lines.len() {
        return Err(Error::Range { what: "coordinate", index: i });
    }
    let not_injective = || Error::NotOreInjective(format!("{}{} on {:?}", gen_name(elem), i + 1, m.lines[i]));
    let line = match (&m.lines[i], elem) {
        (Line::Poly, Gen::X) => Line::XShift(int(0)),
        (Line::XShift(l), Gen::X) => Line::XShift(l.clone()),
        (Line::DShift(nu), Gen::X) if !nu.is_integer() => Line::XShift(-nu - int(1)),
        (Line::FPoly, Gen::D) => Line::DShift(int(0)),
        (Line::DShift(nu), Gen::D) => Line::DShift(nu.clone()),
        (Line::XShift(l), Gen::D) if !l.is_integer() => Line::DShift(-l - int(1)),
        _ => return Err(not_injective()),
    };
    let mut lines = m.lines.clone();
    lines[i] = line;
    Ok(LineModule { lines, fourier: 0 })
}

fn gen_name(g: Gen) -> &'static str {
    match g {
        Gen::X => "x",
        Gen::D => "d",
    }
}

/// Twists an already localized module by `a^c` on coordinate `i`.
fn twist_line(m: &LineModule, i: usize, c: &Scalar) -> LineModule {
    let mut lines = m.lines.clone();
    lines[i] = match &lines[i] {
        Line::XShift(l) => Line::XShift(l + c),
        Line::DShift(nu) => Line::DShift(nu + c),
        other => other.clone(),
    };
    LineModule { lines, fourier: 0 }
}

/// `D^c_<a> M`.
pub fn twisted_localize_lines(m: &LineModule, t: &TwistData) -> Result<Localized> {
    let loc = localize(m, t.i, t.elem)?;
    Ok(Localized { module: twist_line(&loc, t.i, &t.c) })
}

pub fn twisted_localize(p: &DModule, t: &TwistData) -> Result<Localized> {
    twisted_localize_lines(&p.line_module(), t)
}

/// Sequential twisted localization at pairwise commuting elements.
pub fn localize_gamma(p: &DModule, gamma: &[(usize, Gen)], z: &[Scalar]) -> Result<Localized> {
    if gamma.len() != z.len() {
        return Err(Error::Dimension { expected: gamma.len(), got: z.len() });
    }
    let mut seen = std::collections::BTreeSet::new();
    for (i, _) in gamma {
        if !seen.insert(*i) {
            return Err(Error::Validation(format!("coordinate {} appears twice", i + 1)));
        }
    }
    let mut m = p.line_module();
    for ((i, g), c) in gamma.iter().zip(z) {
        m = twisted_localize_lines(&m, &TwistData::new(*i, *g, c.clone()))?.module;
    }
    Ok(Localized { module: m })
}

/// Largest coefficient of `u (a^c m) - a^c (sum_k binom(-c, k) ad(a)^k(u) a^(-k) m)`
/// over random vectors `m` of the localized module.
pub fn twist_action_check(
    p: &DModule,
    t: &TwistData,
    u: &WeylElement,
    radius: i64,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<Scalar> {
    let base = localize(&p.line_module(), t.i, t.elem)?;
    let twisted = twist_line(&base, t.i, &t.c);
    let series = phi_with(u, t.i, t.elem, &-&t.c, 64)?;
    let labels = base.labels_in(&crate::lattice::Window::radius(p.n(), radius));
    let mut worst = Scalar::zero();
    for _ in 0..samples {
        let m = random_combination(&labels, 3, rng);
        // a^c relabels e(k) of the base line as e(k) of the twisted line.
        let lhs = twisted.act_weyl(u, &m);
        let rhs = series.act(&base, &m)?;
        let mut d = lhs;
        d.sub(&rhs);
        worst = worst.max(d.max_abs());
    }
    Ok(worst)
}

/// Largest coefficient of `phi_m(u) v - a^m u a^(-m) v` for integer `m`.
pub fn conjugation_check(
    p: &DModule,
    t: &TwistData,
    u: &WeylElement,
    radius: i64,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<Scalar> {
    let m = crate::lattice::to_i64(&t.c)
        .ok_or_else(|| Error::Validation(format!("exponent {} is not an integer", fmt_scalar(&t.c))))?;
    let base = localize(&p.line_module(), t.i, t.elem)?;
    let series = phi(u, t, 64)?;
    let a = t.element(p.n());
    let labels = base.labels_in(&crate::lattice::Window::radius(p.n(), radius));
    let mut worst = Scalar::zero();
    for _ in 0..samples {
        let v = random_combination(&labels, 3, rng);
        let lhs = series.act(&base, &v)?;
        let mut w = v.clone();
        for _ in 0..m.max(0) {
            w = apply_inverse(&base, t.i, t.elem, &w)?;
        }
        for _ in 0..(-m).max(0) {
            w = base.act_weyl(&a, &w);
        }
        w = base.act_weyl(u, &w);
        for _ in 0..m.max(0) {
            w = base.act_weyl(&a, &w);
        }
        for _ in 0..(-m).max(0) {
            w = apply_inverse(&base, t.i, t.elem, &w)?;
        }
        let mut d = lhs;
        d.sub(&w);
        worst = worst.max(d.max_abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{frac, Window};
    use crate::linalg::WindowMatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn line(l: Line) -> LineModule {
        LineModule { lines: vec![l], fourier: 0 }
    }

    #[test]
    fn phi_examples() {
        let x = WeylElement::x(1, 0);
        let d = WeylElement::d(1, 0);
        let t = TwistData::new(0, Gen::X, frac(1, 2));
        let r = phi(&x, &t, 8).unwrap();
        assert_eq!(r.terms, vec![(x.clone(), 0)]);
        let r = phi(&d, &t, 8).unwrap();
        assert_eq!(r.terms, vec![(d.clone(), 0), (WeylElement::one(1).scale(&frac(-1, 2)), 1)]);
    }

    #[test]
    fn localization_kinds() {
        let o = DModule::polynomial(1);
        let r = twisted_localize(&o, &TwistData::new(0, Gen::X, frac(1, 2))).unwrap();
        assert_eq!(r.as_dmodule(), Some(DModule::new(vec![DFactor::Laurent(frac(1, 2))])));
        assert!(!r.nonsimple());
        let r = twisted_localize(&o, &TwistData::new(0, Gen::X, int(0))).unwrap();
        assert!(r.nonsimple());
        assert!(matches!(
            twisted_localize(&o, &TwistData::new(0, Gen::D, int(0))),
            Err(Error::NotOreInjective(_))
        ));
        let f = DModule::new(vec![DFactor::FPoly]);
        assert!(matches!(
            twisted_localize(&f, &TwistData::new(0, Gen::X, int(0))),
            Err(Error::NotOreInjective(_))
        ));
        let r = twisted_localize(&f, &TwistData::new(0, Gen::D, frac(1, 3))).unwrap();
        assert_eq!(r.as_dmodule(), Some(DModule::new(vec![DFactor::Laurent(frac(-4, 3))])));
        let r = twisted_localize(&f, &TwistData::new(0, Gen::D, int(0))).unwrap();
        assert!(r.nonsimple());
        assert_eq!(r.as_dmodule(), None);
    }

    #[test]
    fn fourier_mirror() {
        // Localizing at x then Fourier equals Fourier then localizing at d.
        for c in [frac(1, 2), frac(-1, 3), frac(2, 5)] {
            for p in [DModule::polynomial(1), DModule::new(vec![DFactor::Laurent(frac(1, 7))])] {
                let a = twisted_localize(&p, &TwistData::new(0, Gen::X, c.clone())).unwrap();
                let b = twisted_localize(&p.fourier(), &TwistData::new(0, Gen::D, c.clone())).unwrap();
                assert_eq!(a.as_dmodule().unwrap().fourier(), b.as_dmodule().unwrap());
            }
        }
    }

    #[test]
    fn twist_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 1;
        let words = [WeylElement::x(n, 0), WeylElement::d(n, 0), WeylElement::from_word(n, &[(0, Gen::D), (0, Gen::D), (0, Gen::X)])];
        for (p, g) in [
            (DModule::polynomial(1), Gen::X),
            (DModule::new(vec![DFactor::FPoly]), Gen::D),
            (DModule::new(vec![DFactor::Laurent(frac(1, 2))]), Gen::X),
            (DModule::new(vec![DFactor::Laurent(frac(1, 2))]), Gen::D),
        ] {
            for c in [frac(1, 2), frac(-1, 3), int(2)] {
                for u in &words {
                    let t = TwistData::new(0, g, c.clone());
                    assert!(twist_action_check(&p, &t, u, 5, 20, &mut rng).unwrap().is_zero());
                }
            }
            for c in [int(2), int(-1)] {
                for u in &words {
                    let t = TwistData::new(0, g, c.clone());
                    assert!(conjugation_check(&p, &t, u, 5, 20, &mut rng).unwrap().is_zero());
                }
            }
        }
    }

    fn matrices(m: &LineModule, w: &Window) -> Vec<WindowMatrix<Label>> {
        let labels = m.labels_in(w);
        let mut out = Vec::new();
        for i in 0..m.lines.len() {
            for g in [Gen::X, Gen::D] {
                out.push(WindowMatrix::from_columns(&labels, |l| match m.act_gen(i, g, l) {
                    Some((l2, c)) => DVector::from_terms([(l2, c)]),
                    None => DVector::new(),
                }));
            }
        }
        out
    }

    #[test]
    fn round_trip_and_integer_relabeling() {
        let w = Window::radius(1, 5);
        let p = DModule::new(vec![DFactor::Laurent(frac(1, 2))]);
        let once = twisted_localize(&p, &TwistData::new(0, Gen::X, frac(-1, 2))).unwrap();
        assert!(once.nonsimple());
        let back = twisted_localize_lines(&once.module, &TwistData::new(0, Gen::X, frac(1, 2))).unwrap();
        let zero = twisted_localize(&p, &TwistData::new(0, Gen::X, int(0))).unwrap();
        assert_eq!(matrices(&back.module, &w), matrices(&zero.module, &w));

        // Integer twist: same matrices after relabeling e(k) -> e(k + c).
        let base = line(Line::XShift(frac(1, 2)));
        let t = twisted_localize_lines(&base, &TwistData::new(0, Gen::X, int(2))).unwrap();
        let labels: Vec<Label> = (-5..=5).map(|k| vec![k]).collect();
        for g in [Gen::X, Gen::D] {
            let a = WindowMatrix::from_columns(&labels, |l| match t.module.act_gen(0, g, l) {
                Some((l2, c)) => DVector::from_terms([(l2, c)]),
                None => DVector::new(),
            });
            let shifted: Vec<Label> = labels.iter().map(|l| vec![l[0] + 2]).collect();
            let b = WindowMatrix::from_columns(&shifted, |l| match base.act_gen(0, g, l) {
                Some((l2, c)) => DVector::from_terms([(l2, c)]),
                None => DVector::new(),
            });
            assert_eq!(a.relabel(|l| vec![l[0] + 2]), b);
        }
    }

    #[test]
    fn gamma() {
        let p = DModule::polynomial(2);
        let g = [(0, Gen::X), (1, Gen::X)];
        let z = [frac(1, 2), frac(1, 3)];
        let r = localize_gamma(&p, &g, &z).unwrap();
        assert_eq!(
            r.as_dmodule(),
            Some(DModule::new(vec![DFactor::Laurent(frac(1, 2)), DFactor::Laurent(frac(1, 3))]))
        );
        let r2 = localize_gamma(&p, &[(1, Gen::X), (0, Gen::X)], &[frac(1, 3), frac(1, 2)]).unwrap();
        let w = Window::radius(2, 4);
        assert_eq!(matrices(&r.module, &w), matrices(&r2.module, &w));
        assert_eq!(localize_gamma(&p, &[], &[]).unwrap().module, p.line_module());
        assert!(localize_gamma(&p, &[(0, Gen::X), (0, Gen::X)], &z).is_err());
    }
}
