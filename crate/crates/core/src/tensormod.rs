//! Tensor modules `T(P, V)` over the vector field algebra `W_n`.
//!
//! On `P (x) V` the root vector `x^a d_j` acts by
//! `x^a d_j (f (x) v) = x^a d_j f (x) v + sum_i a_i x^(a - e_i) f (x) E_ij v`
//! and `O_n` acts on the `P` factor alone.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::dmod::{DModule, Label, WeylAction};
use crate::error::{Error, Result};
use crate::glmod::{subsets, wedge, wedge_index, GlDesc, GlModule, VLabel};
use crate::lattice::{
    finmult_criterion, int, support_sum, wn_roots_up_to, Scalar, SupportSet, Weight, Window, WnRoot,
};
use crate::linalg::{random_combination, EchelonBasis, Vector};

/// Basis pair `e(mu) (x) v`.
pub type TLabel = (Label, VLabel);
pub type TVector = Vector<TLabel>;

/// Polynomial vector field as a combination of root vectors `x^a d_j`.
pub type VectorField = Vector<WnRoot>;

pub fn field(r: WnRoot) -> VectorField {
    VectorField::basis(r)
}

/// Lie bracket of vector fields:
/// `[x^a d_i, x^b d_j] = x^a d_i(x^b) d_j - x^b d_j(x^a) d_i`.
pub fn bracket(x: &VectorField, y: &VectorField) -> VectorField {
    let mut out = VectorField::new();
    for (r, c) in x.iter() {
        for (s, d) in y.iter() {
            let cd = c * d;
            if s.alpha[r.j] > 0 {
                let mut a: Vec<u32> = r.alpha.iter().zip(&s.alpha).map(|(p, q)| p + q).collect();
                a[r.j] -= 1;
                out.add_term(WnRoot::new(a, s.j), &cd * int(s.alpha[r.j] as i64));
            }
            if r.alpha[s.j] > 0 {
                let mut a: Vec<u32> = r.alpha.iter().zip(&s.alpha).map(|(p, q)| p + q).collect();
                a[s.j] -= 1;
                out.add_term(WnRoot::new(a, r.j), -&cd * int(r.alpha[s.j] as i64));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorModule {
    pub p: DModule,
    pub v: GlModule,
}

impl TensorModule {
    /// Checks dimensions and, for finite `V`, the `gl(n)` relations.
    pub fn new(p: DModule, v: GlModule) -> Result<Self> {
        if p.n() != v.n() {
            return Err(Error::Dimension { expected: p.n(), got: v.n() });
        }
        if let Some(labels) = v.labels() {
            v.check_commutators(&labels)?;
        }
        Ok(TensorModule { p, v })
    }

    pub fn n(&self) -> usize {
        self.p.n()
    }

    pub fn weight(&self, l: &TLabel) -> Weight {
        &self.p.weight(&l.0) + &self.v.weight(&l.1)
    }

    /// Basis pairs materialized by a window, ordered lexicographically by
    /// (P-label, V-label). For finite `V` these are the pairs whose total
    /// weight lies in the window; for infinite `V` both factors must have
    /// their own weights in the window.
    pub fn labels_in(&self, window: &Window) -> Vec<TLabel> {
        let mut out = Vec::new();
        match self.v.labels() {
            Some(vl) => {
                for v in vl {
                    let w = self.v.weight(&v);
                    let shifted = Window {
                        lo: window.lo.iter().zip(&w.0).map(|(a, b)| a - b).collect(),
                        hi: window.hi.iter().zip(&w.0).map(|(a, b)| a - b).collect(),
                        margin: 0,
                    };
                    for l in self.p.labels_in(&shifted) {
                        out.push((l, v.clone()));
                    }
                }
            }
            None => {
                let pl = self.p.labels_in(window);
                for v in self.v.labels_in(window) {
                    for l in &pl {
                        out.push((l.clone(), v.clone()));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Basis pairs of weight `mu` materialized by the window.
    pub fn labels_of_weight(&self, mu: &Weight, window: &Window) -> Vec<TLabel> {
        let mut out = Vec::new();
        let vl = match self.v.labels() {
            Some(vl) => {
                if !window.contains(mu) {
                    return out;
                }
                vl
            }
            None => self.v.labels_in(window),
        };
        for v in vl {
            let rest = mu - &self.v.weight(&v);
            if let Some(l) = self.p.label_of_weight(&rest) {
                if self.v.is_finite() || window.contains(&rest) {
                    out.push((l, v));
                }
            }
        }
        out.sort();
        out
    }

    /// `x^a` acting on the `P` factor.
    pub fn act_on(&self, alpha: &[u32], v: &TVector) -> TVector {
        let zero = vec![0; self.n()];
        let mut out = TVector::new();
        for ((l, vl), c) in v.iter() {
            if let Some((l2, s)) = self.p.act_monomial(alpha, &zero, l) {
                out.add_term((l2, vl.clone()), s * c);
            }
        }
        out
    }

    pub fn act_root(&self, r: &WnRoot, v: &TVector) -> TVector {
        let n = self.n();
        let mut b = vec![0; n];
        b[r.j] = 1;
        let zero = vec![0; n];
        let mut out = TVector::new();
        for ((l, vl), c) in v.iter() {
            if let Some((l2, s)) = self.p.act_monomial(&r.alpha, &b, l) {
                out.add_term((l2, vl.clone()), s * c);
            }
            for i in 0..n {
                if r.alpha[i] == 0 {
                    continue;
                }
                let mut a = r.alpha.clone();
                a[i] -= 1;
                let Some((l2, s)) = self.p.act_monomial(&a, &zero, l) else {
                    continue;
                };
                let k = s * c * int(r.alpha[i] as i64);
                for (v2, e) in self.v.act_e(i, r.j, vl).iter() {
                    out.add_term((l2.clone(), v2.clone()), &k * e);
                }
            }
        }
        out
    }

    pub fn act_wn(&self, x: &VectorField, v: &TVector) -> TVector {
        let mut out = TVector::new();
        for (r, c) in x.iter() {
            out.add_scaled(&self.act_root(r, v), c);
        }
        out
    }

    /// Splits a vector into weight components.
    pub fn components(&self, v: &TVector) -> BTreeMap<Weight, TVector> {
        let mut out: BTreeMap<Weight, TVector> = BTreeMap::new();
        for (l, c) in v.iter() {
            out.entry(self.weight(l)).or_default().add_term(l.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for TensorModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {})", self.p, self.v.desc)
    }
}

pub fn act_wn(t: &TensorModule, x: &VectorField, v: &TVector) -> TVector {
    t.act_wn(x, v)
}

pub fn act_on(t: &TensorModule, alpha: &[u32], v: &TVector) -> TVector {
    t.act_on(alpha, v)
}

/// `supp P + supp V`; only available when `V` is finite-dimensional.
pub fn tmod_support(t: &TensorModule) -> Result<SupportSet> {
    let Some(labels) = t.v.labels() else {
        return Err(Error::Unsupported(format!(
            "support of {t} is not a union of shifted cones; enumerate it on a window instead"
        )));
    };
    let vs = SupportSet::from_points(t.n(), labels.iter().map(|l| t.v.weight(l)));
    support_sum(&t.p.support(), &vs)
}

/// Number of basis pairs of weight `mu` materialized by `window`.
pub fn tmod_mult(t: &TensorModule, mu: &Weight, window: &Window) -> usize {
    t.labels_of_weight(mu, window).len()
}

/// Multiplicity table over all weights in the window.
pub fn mult_table(t: &TensorModule, window: &Window) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for l in t.labels_in(window) {
        let w = t.weight(&l);
        if window.contains(&w) {
            *out.entry(w).or_insert(0) += 1;
        }
    }
    out
}

/// Degree `k` if `V` is literally `wedge(k)`.
pub fn wedge_degree(t: &TensorModule) -> Option<usize> {
    match t.v.desc {
        GlDesc::Wedge(k) => Some(k),
        _ => None,
    }
}

/// The de Rham differential `d(f (x) v) = sum_i d_i f (x) e_i ^ v`, landing in
/// `T(P, wedge(k+1))`.
pub fn derham_d(t: &TensorModule, v: &TVector) -> Result<TVector> {
    let n = t.n();
    let k = wedge_degree(t).ok_or_else(|| Error::Validation(format!("{t} is not over an exterior power")))?;
    if k >= n {
        return Err(Error::Range { what: "de Rham degree", index: k });
    }
    let subs = subsets(n, k);
    let mut out = TVector::new();
    for ((l, vl), c) in v.iter() {
        let VLabel::Index(si) = vl else { unreachable!("wedge labels are indices") };
        let s = &subs[*si];
        for i in 0..n {
            if s.contains(&i) {
                continue;
            }
            let Some((l2, a)) = t.p.act_gen(i, crate::dmod::Gen::D, l) else {
                continue;
            };
            let before = s.iter().filter(|&&x| x < i).count();
            let mut u = s.clone();
            u.push(i);
            u.sort();
            let sign = if before % 2 == 0 { int(1) } else { int(-1) };
            out.add_term((l2, VLabel::Index(wedge_index(n, &u))), a * c * sign);
        }
    }
    Ok(out)
}

/// `T(P, wedge(k))`.
pub fn derham_module(p: &DModule, k: usize) -> Result<TensorModule> {
    TensorModule::new(p.clone(), wedge(p.n(), k)?)
}

/// Largest coefficient of `d(d(v))` over random samples in every degree.
pub fn derham_complex_residual(p: &DModule, window: &Window, samples: usize, rng: &mut impl Rng) -> Result<Scalar> {
    let n = p.n();
    let mut worst = Scalar::zero();
    for k in 0..n.saturating_sub(1) {
        let t0 = derham_module(p, k)?;
        let t1 = derham_module(p, k + 1)?;
        let labels = t0.labels_in(window);
        for _ in 0..samples {
            let v = random_combination(&labels, 4, rng);
            let dd = derham_d(&t1, &derham_d(&t0, &v)?)?;
            worst = worst.max(dd.max_abs());
        }
    }
    Ok(worst)
}

/// Per-weight dimensions of the window closure of a seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    /// Dimensions at weights of the interior window.
    pub interior: BTreeMap<Weight, usize>,
    /// Total number of basis vectors found (all weights).
    pub total: usize,
}

const CLOSURE_LIMIT: usize = 200_000;

/// Window heuristic for the submodule generated by `seed`.
///
/// Generators `x^a d_k` with `|a| <= gen_degree` are applied to every found
/// vector whose weight lies in the window; their outputs are kept exactly,
/// even when they leave the window. Dimensions are reported on the interior
/// window only and are lower bounds for the true submodule.
pub fn submodule_closure(t: &TensorModule, seed: &TVector, window: &Window, gen_degree: u32) -> Result<Closure> {
    if seed.is_zero() {
        return Err(Error::Validation("closure of the zero vector".into()));
    }
    if gen_degree == 0 {
        return Err(Error::Validation("generator degree must be at least 1".into()));
    }
    let gens = wn_roots_up_to(t.n(), gen_degree as i64 - 1);
    let mut spaces: BTreeMap<Weight, EchelonBasis<TLabel>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut total = 0;
    let mut push = |w: Weight, v: &TVector, spaces: &mut BTreeMap<Weight, EchelonBasis<TLabel>>, queue: &mut VecDeque<(Weight, TVector)>| -> Result<()> {
        if let Some(r) = spaces.entry(w.clone()).or_default().insert(v) {
            total += 1;
            if total > CLOSURE_LIMIT {
                return Err(Error::Unsupported(format!("closure exceeds {CLOSURE_LIMIT} basis vectors")));
            }
            queue.push_back((w, r));
        }
        Ok(())
    };
    for (w, v) in t.components(seed) {
        push(w, &v, &mut spaces, &mut queue)?;
    }
    while let Some((w, v)) = queue.pop_front() {
        if !window.contains(&w) {
            continue;
        }
        for g in &gens {
            let out = t.act_root(g, &v);
            if !out.is_zero() {
                push(&w + &g.weight(), &out, &mut spaces, &mut queue)?;
            }
        }
    }
    let inner = window.interior();
    let interior = spaces
        .iter()
        .filter(|(w, s)| inner.contains(w) && s.dim() > 0)
        .map(|(w, s)| (w.clone(), s.dim()))
        .collect();
    Ok(Closure { interior, total: spaces.values().map(|s| s.dim()).sum() })
}

/// Case of the classification of simple subquotients for `T(P, V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Case {
    TensorSimple,
    DerhamImage,
    TrivialSub,
    NotFiniteMult,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::TensorSimple => "TENSOR_SIMPLE",
            Case::DerhamImage => "DERHAM_IMAGE",
            Case::TrivialSub => "TRIVIAL_SUB",
            Case::NotFiniteMult => "NOT_FINITE_MULT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: Case,
    pub notes: Vec<String>,
}

pub fn classify_case(t: &TensorModule) -> Result<Classification> {
    let n = t.n();
    let mut notes = Vec::new();
    let sp = t.p.shadow()?;
    let sv = t.v.shadow()?;
    if !finmult_criterion(&sp, &sv)? {
        notes.push("I_P u Minus_P is not contained in F_V u Minus_V".into());
        return Ok(Classification { case: Case::NotFiniteMult, notes });
    }
    let Some(k) = t.v.fundamental_degree() else {
        notes.push("V is not a fundamental representation".into());
        return Ok(Classification { case: Case::TensorSimple, notes });
    };
    if k == 0 && t.p.is_polynomial() {
        notes.push("the constants form a trivial submodule".into());
        return Ok(Classification { case: Case::TrivialSub, notes });
    }
    if k < n {
        notes.push(format!("V has the character of wedge({k}); the simple subquotient is d T(P, wedge({k}))"));
        return Ok(Classification { case: Case::DerhamImage, notes });
    }
    if !t.p.sum_partials_saturates() {
        notes.push(format!("V has the character of wedge({n}) and sum_i d_i P != P"));
        return Ok(Classification { case: Case::TensorSimple, notes });
    }
    notes.push(format!(
        "V has the character of wedge({n}) and sum_i d_i P = P, so d T(P, wedge({})) is all of T(P, V)",
        n - 1
    ));
    notes.push("the top-degree simplicity statement reads the other way for this boundary case; both are reported".into());
    Ok(Classification { case: Case::DerhamImage, notes })
}
