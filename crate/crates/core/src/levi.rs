//! The Levi algebra `g = W_m ⋉ (k (x) O_m)`, the modules `F(R, S) = R (x) S`,
//! parabolic tops, and the comparison of `F(T(P, V), S)` with the top of
//! `T(P~, S^)`.
//!
//! Coordinates of `gl(n)` are split as `1..p` (first `k`-block), `p+1..p+m`
//! (the `W_m` variables, renamed `1..m` inside `g`), and `p+m+1..n` (second
//! `k`-block).

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::Rng;

use crate::dmod::{DFactor, DModule};
use crate::error::{Error, Result};
use crate::glmod::{character, sym, tensor_gl, GlModule, VLabel};
use crate::lattice::{int, wn_roots_up_to, Scalar, ShiftedCone, SupportSet, Weight, Window, WnRoot};
use crate::linalg::{random_combination, Vector};
use crate::tensormod::{bracket, field, tmod_mult, tmod_support, TLabel, TVector, TensorModule, VectorField};

/// Shape of `g`: `k = gl(p) + gl(n - m - p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeviAlg {
    pub n: usize,
    pub p: usize,
    pub m: usize,
}

impl LeviAlg {
    pub fn new(n: usize, p: usize, m: usize) -> Result<Self> {
        if p + m > n || m == 0 {
            return Err(Error::Validation(format!("need 1 <= m and p + m <= n, got n={n}, p={p}, m={m}")));
        }
        Ok(LeviAlg { n, p, m })
    }

    /// Sizes of the nonempty `gl` blocks of `k`.
    pub fn blocks(&self) -> Vec<usize> {
        [self.p, self.n - self.m - self.p].into_iter().filter(|&b| b > 0).collect()
    }

    /// Global `gl(n)` coordinate of position `i` in block `b`.
    pub fn block_coordinate(&self, b: usize, i: usize) -> usize {
        if b == 0 && self.p > 0 {
            i
        } else {
            self.p + self.m + i
        }
    }
}

/// A `k`-module as an outer tensor product of one module per block.
#[derive(Clone, Debug)]
pub struct KModule {
    pub blocks: Vec<GlModule>,
}

impl KModule {
    pub fn labels(&self) -> Result<Vec<Vec<VLabel>>> {
        let per: Vec<Vec<VLabel>> = self
            .blocks
            .iter()
            .map(|b| b.labels().ok_or_else(|| Error::Unsupported("infinite-dimensional k-module".into())))
            .collect::<Result<_>>()?;
        Ok(crate::lattice::cartesian(&per))
    }

    pub fn dim(&self) -> Result<usize> {
        Ok(self.labels()?.len())
    }

    /// `E_ij` of block `b` on an outer-product label.
    pub fn act_e(&self, b: usize, i: usize, j: usize, label: &[VLabel]) -> Vector<Vec<VLabel>> {
        let mut out = Vector::new();
        for (l, c) in self.blocks[b].act_e(i, j, &label[b]).iter() {
            let mut nl = label.to_vec();
            nl[b] = l.clone();
            out.add_term(nl, c.clone());
        }
        out
    }
}

/// Element of `g`: a vector field in `W_m`, or `x^f (x) E_ij` with `E_ij` in
/// block `b` of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeviElem {
    Field(VectorField),
    Current { f: Vec<u32>, block: usize, i: usize, j: usize },
}

pub type FLabel = (TLabel, Vec<VLabel>);
pub type FVector = Vector<FLabel>;

/// `F(R, S) = R (x) S` with `R = T(P, V)` a tensor module over `W_m`.
#[derive(Clone, Debug)]
pub struct FrsModule {
    pub alg: LeviAlg,
    pub r: TensorModule,
    pub s: KModule,
}

impl FrsModule {
    pub fn new(alg: LeviAlg, r: TensorModule, s: KModule) -> Result<Self> {
        if r.n() != alg.m {
            return Err(Error::Dimension { expected: alg.m, got: r.n() });
        }
        let sizes: Vec<usize> = s.blocks.iter().map(|b| b.n()).collect();
        if sizes != alg.blocks() {
            return Err(Error::Validation(format!("k-module blocks {sizes:?} do not match {:?}", alg.blocks())));
        }
        Ok(FrsModule { alg, r, s })
    }

    pub fn labels_in(&self, window: &Window) -> Result<Vec<FLabel>> {
        let sl = self.s.labels()?;
        let mut out = Vec::new();
        for r in self.r.labels_in(window) {
            for s in &sl {
                out.push((r.clone(), s.clone()));
            }
        }
        Ok(out)
    }

    /// Weight in `gl(n)` coordinates.
    pub fn weight(&self, l: &FLabel) -> Weight {
        let a = self.alg;
        let mut w = Weight::zero(a.n);
        let rw = self.r.weight(&l.0);
        for i in 0..a.m {
            w.0[a.p + i] = rw.0[i].clone();
        }
        for (b, sl) in l.1.iter().enumerate() {
            let sw = self.s.blocks[b].weight(sl);
            for (i, x) in sw.0.into_iter().enumerate() {
                w.0[a.block_coordinate(b, i)] = x;
            }
        }
        w
    }

    fn on_r(&self, v: &FVector, mut f: impl FnMut(&TVector) -> TVector) -> FVector {
        let mut out = FVector::new();
        for ((r, s), c) in v.iter() {
            for (r2, d) in f(&TVector::basis(r.clone())).iter() {
                out.add_term((r2.clone(), s.clone()), c * d);
            }
        }
        out
    }

    /// Multiplication by `x^f` in `O_m`.
    pub fn act_o(&self, f: &[u32], v: &FVector) -> FVector {
        self.on_r(v, |r| self.r.act_on(f, r))
    }

    pub fn act_levi(&self, e: &LeviElem, v: &FVector) -> FVector {
        match e {
            LeviElem::Field(x) => self.on_r(v, |r| self.r.act_wn(x, r)),
            LeviElem::Current { f, block, i, j } => {
                let mut out = FVector::new();
                for ((r, s), c) in v.iter() {
                    let fr = self.r.act_on(f, &TVector::basis(r.clone()));
                    let ys = self.s.act_e(*block, *i, *j, s);
                    for (r2, a) in fr.iter() {
                        for (s2, b) in ys.iter() {
                            out.add_term((r2.clone(), s2.clone()), c * a * b);
                        }
                    }
                }
                out
            }
        }
    }

    /// Largest residual of the `(g, O_m)` axioms and the bracket relations of
    /// `g` on random samples.
    pub fn check_g_axioms(&self, window: &Window, samples: usize, rng: &mut impl Rng) -> Result<Scalar> {
        let m = self.alg.m;
        let labels = self.labels_in(window)?;
        let fields: Vec<WnRoot> = wn_roots_up_to(m, 1);
        let monos: Vec<Vec<u32>> = (0..=2).flat_map(|d| crate::lattice::multi_indices(m, d)).collect();
        let ks: Vec<(usize, usize, usize)> = self
            .alg
            .blocks()
            .iter()
            .enumerate()
            .flat_map(|(b, &sz)| (0..sz).flat_map(move |i| (0..sz).map(move |j| (b, i, j))))
            .collect();
        let mut worst = Scalar::zero();
        let mut note = |d: FVector| {
            let a = d.max_abs();
            if a > worst {
                worst = a;
            }
        };
        for _ in 0..samples {
            let v = random_combination(&labels, 3, rng);
            let x = field(fields[rng.gen_range(0..fields.len())].clone());
            let y = field(fields[rng.gen_range(0..fields.len())].clone());
            let f = monos[rng.gen_range(0..monos.len())].clone();
            let h = monos[rng.gen_range(0..monos.len())].clone();
            let xe = LeviElem::Field(x.clone());

            // X(f v) = f X(v) + X(f) v
            let lhs = self.act_levi(&xe, &self.act_o(&f, &v));
            let mut rhs = self.act_o(&f, &self.act_levi(&xe, &v));
            for (g, c) in apply_field_to_monomial(&x, &f).iter() {
                rhs.add_scaled(&self.act_o(g, &v), c);
            }
            note(crate::linalg::diff(&lhs, &rhs));

            // [X, Y] v
            let mut lhs = self.act_levi(&xe, &self.act_levi(&LeviElem::Field(y.clone()), &v));
            lhs.sub(&self.act_levi(&LeviElem::Field(y.clone()), &self.act_levi(&xe, &v)));
            note(crate::linalg::diff(&lhs, &self.act_levi(&LeviElem::Field(bracket(&x, &y)), &v)));

            if ks.is_empty() {
                continue;
            }
            let (b, i, j) = ks[rng.gen_range(0..ks.len())];
            let (b2, k, l) = ks[rng.gen_range(0..ks.len())];
            let hy = LeviElem::Current { f: h.clone(), block: b, i, j };

            // (h (x) Y)(f v) = (h f) Y v
            let lhs = self.act_levi(&hy, &self.act_o(&f, &v));
            let hf: Vec<u32> = h.iter().zip(&f).map(|(a, c)| a + c).collect();
            let rhs = self.act_o(&hf, &self.act_levi(&LeviElem::Current { f: vec![0; m], block: b, i, j }, &v));
            note(crate::linalg::diff(&lhs, &rhs));

            // [X, h (x) Y] = X(h) (x) Y
            let mut lhs = self.act_levi(&xe, &self.act_levi(&hy, &v));
            lhs.sub(&self.act_levi(&hy, &self.act_levi(&xe, &v)));
            let mut rhs = FVector::new();
            for (g, c) in apply_field_to_monomial(&x, &h).iter() {
                rhs.add_scaled(&self.act_levi(&LeviElem::Current { f: g.clone(), block: b, i, j }, &v), c);
            }
            note(crate::linalg::diff(&lhs, &rhs));

            // [f (x) E_ij, h (x) E_kl] = f h (x) [E_ij, E_kl]
            let fe = LeviElem::Current { f: f.clone(), block: b, i, j };
            let he = LeviElem::Current { f: h.clone(), block: b2, i: k, j: l };
            let mut lhs = self.act_levi(&fe, &self.act_levi(&he, &v));
            lhs.sub(&self.act_levi(&he, &self.act_levi(&fe, &v)));
            let mut rhs = FVector::new();
            if b == b2 {
                if j == k {
                    rhs.add(&self.act_levi(&LeviElem::Current { f: hf.clone(), block: b, i, j: l }, &v));
                }
                if l == i {
                    rhs.sub(&self.act_levi(&LeviElem::Current { f: hf.clone(), block: b, i: k, j }, &v));
                }
            }
            note(crate::linalg::diff(&lhs, &rhs));
        }
        Ok(worst)
    }
}

/// `X(x^f)` as a combination of monomials.
pub fn apply_field_to_monomial(x: &VectorField, f: &[u32]) -> Vector<Vec<u32>> {
    let mut out = Vector::new();
    for (r, c) in x.iter() {
        if f[r.j] == 0 {
            continue;
        }
        let mut g: Vec<u32> = r.alpha.iter().zip(f).map(|(a, b)| a + b).collect();
        g[r.j] -= 1;
        out.add_term(g, c * int(f[r.j] as i64));
    }
    out
}

/// The functional `gamma` defining a parabolic subalgebra: roots with
/// `(gamma, alpha) > 0` span the nilradical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    pub gamma: Vec<Scalar>,
}

impl ParabolicData {
    /// `gamma = (1^p, 0^m, (-1)^(n-p-m))`.
    pub fn for_levi(a: &LeviAlg) -> Self {
        let mut g = vec![int(0); a.n];
        for x in g.iter_mut().take(a.p) {
            *x = int(1);
        }
        for x in g.iter_mut().skip(a.p + a.m) {
            *x = int(-1);
        }
        ParabolicData { gamma: g }
    }

    pub fn pairing(&self, alpha: &Weight) -> Scalar {
        self.gamma.iter().zip(&alpha.0).map(|(a, b)| a * b).sum()
    }

    /// Splits the roots of `W_n` up to the given degree into `(Delta_0, Delta_+, Delta_-)`.
    pub fn split_roots(&self, max_degree: i64) -> (Vec<WnRoot>, Vec<WnRoot>, Vec<WnRoot>) {
        let n = self.gamma.len();
        let (mut zero, mut plus, mut minus) = (Vec::new(), Vec::new(), Vec::new());
        for r in wn_roots_up_to(n, max_degree) {
            let w = r.weight();
            if w == Weight::zero(n) {
                continue;
            }
            let s = self.pairing(&w);
            if s.is_zero() {
                zero.push(r);
            } else if s > Scalar::zero() {
                plus.push(r);
            } else {
                minus.push(r);
            }
        }
        (zero, plus, minus)
    }
}

/// Whether some root `alpha` of `W_n` with `(gamma, alpha) > 0` has
/// `lambda + alpha` in the support. Exact: every root weight is either in
/// `Z_{>=0}^n \ 0` or of the form `-e_j + beta` with `beta >= 0`, `beta_j = 0`,
/// and for each cone and root type the feasible `alpha` form a box.
pub fn raisable(support: &SupportSet, pd: &ParabolicData, lambda: &Weight) -> bool {
    let n = lambda.dim();
    for cone in &support.cones {
        let diff: Option<Vec<i64>> =
            lambda.0.iter().zip(&cone.base.0).map(|(l, b)| crate::lattice::to_i64(&(l - b))).collect();
        let Some(diff) = diff else { continue };
        // lambda + alpha - base = diff + alpha must be an allowed offset
        let offset: Vec<(Option<i64>, Option<i64>)> = (0..n)
            .map(|k| {
                let (lo, hi) = cone.offset_bounds(k);
                (lo.map(|x| x - diff[k]), hi.map(|x| x - diff[k]))
            })
            .collect();
        let types: Vec<Vec<(Option<i64>, Option<i64>)>> = std::iter::once(vec![(Some(0), None); n])
            .chain((0..n).map(|j| {
                (0..n).map(|k| if k == j { (Some(-1), Some(-1)) } else { (Some(0), None) }).collect()
            }))
            .collect();
        for t in types {
            let boxed: Vec<(Option<i64>, Option<i64>)> = (0..n)
                .map(|k| {
                    let lo = match (offset[k].0, t[k].0) {
                        (Some(a), Some(b)) => Some(a.max(b)),
                        (a, b) => a.or(b),
                    };
                    let hi = match (offset[k].1, t[k].1) {
                        (Some(a), Some(b)) => Some(a.min(b)),
                        (a, b) => a.or(b),
                    };
                    (lo, hi)
                })
                .collect();
            if boxed.iter().any(|(lo, hi)| matches!((lo, hi), (Some(a), Some(b)) if a > b)) {
                continue;
            }
            let mut best = Scalar::zero();
            let mut unbounded = false;
            for (k, (lo, hi)) in boxed.iter().enumerate() {
                let g = &pd.gamma[k];
                if *g > Scalar::zero() {
                    match hi {
                        Some(h) => best += g * int(*h),
                        None => unbounded = true,
                    }
                } else if *g < Scalar::zero() {
                    match lo {
                        Some(l) => best += g * int(*l),
                        None => unbounded = true,
                    }
                }
            }
            if unbounded || best > Scalar::zero() {
                return true;
            }
        }
    }
    false
}

/// Weights of the `p`-top inside the window.
pub fn p_top(support: &SupportSet, pd: &ParabolicData, window: &Window) -> BTreeSet<Weight> {
    support.enumerate(window).into_iter().filter(|l| !raisable(support, pd, l)).collect()
}

/// `C[x_1..x_p]^F (x) P (x) C[x_(p+m+1)..x_n]`.
pub fn tilde_p(p: &DModule, first: usize, n: usize) -> Result<DModule> {
    let m = p.n();
    if first + m > n {
        return Err(Error::Validation(format!("p + m = {} exceeds n = {n}", first + m)));
    }
    let mut factors = vec![DFactor::FPoly; first];
    factors.extend(p.factors.iter().cloned());
    factors.extend(vec![DFactor::Poly; n - first - m]);
    Ok(DModule { factors, fourier: p.fourier })
}

/// Outcome of comparing `F(T(P, V), S)` with the `p`-top of `T(P~, S^)`.
#[derive(Clone, Debug)]
pub struct BackToTensor {
    pub tilde_p: DModule,
    pub s_hat: GlModule,
    pub highest_weight: Weight,
    pub top: BTreeSet<Weight>,
    pub f_support: BTreeSet<Weight>,
    /// (weight, multiplicity in `T(P~, S^)`, multiplicity in `F`).
    pub mults: BTreeMap<Weight, (usize, usize)>,
    pub pass: bool,
}

/// `S^` for `gl(2)` with highest weight `lambda` relative to `E_12`.
fn s_hat_gl2(lambda: &Weight) -> Result<GlModule> {
    let a = &lambda.0[0] - &lambda.0[1];
    let c = lambda.0[1].clone();
    let twist = character(vec![c.clone(), c])?;
    if a.is_integer() {
        if a < Scalar::zero() {
            return Err(Error::Unsupported(format!(
                "highest weight {lambda} is integral and not dominant; the simple quotient is not realized"
            )));
        }
        let k = crate::lattice::to_i64(&a).expect("integer") as usize;
        return tensor_gl(&sym(2, k), &twist);
    }
    let parent = DModule::new(vec![DFactor::Laurent(a.clone()), DFactor::Poly]);
    tensor_gl(&GlModule::restriction(&parent, &a)?, &twist)
}

/// Support of `T(P~, S^)` when every weight of `S^` differs from its highest
/// weight by a vector admitted by the cone of `P~` (so the cone absorbs it).
fn absorbed_support(pt: &DModule, hw: &Weight, lowering: &Weight) -> Result<SupportSet> {
    let cone = &pt.support().cones[0];
    if !cone.modes.iter().zip(&lowering.0).all(|(m, d)| m.admits(d)) {
        return Err(Error::Unsupported("support of the induced tensor module is not a shifted cone".into()));
    }
    Ok(SupportSet::single(ShiftedCone::new(&cone.base + hw, cone.modes.clone())))
}

pub fn backtotensor_check(
    alg: &LeviAlg,
    p: &DModule,
    v: &GlModule,
    s: &KModule,
    window: &Window,
) -> Result<BackToTensor> {
    if !(alg.n == 2 && alg.m == 1) {
        return Err(Error::Unsupported(format!(
            "n={}, p={}, m={}: only n = 2, m = 1 has a computable S^",
            alg.n, alg.p, alg.m
        )));
    }
    let r = TensorModule::new(p.clone(), v.clone())?;
    let f = FrsModule::new(*alg, r.clone(), s.clone())?;
    let v_w = v.labels().filter(|l| l.len() == 1).map(|l| v.weight(&l[0])).ok_or_else(|| {
        Error::Unsupported("V must be a character of gl(1)".into())
    })?;
    let s_labels = s.labels()?;
    if s_labels.len() != 1 {
        return Err(Error::Unsupported("S must be a character of k".into()));
    }
    let s_w = s.blocks[0].weight(&s_labels[0][0]);
    // lambda = S^U (x) V, with U adding 1 on the first p coordinates.
    let lambda = if alg.p == 1 {
        Weight(vec![&s_w.0[0] + int(1), v_w.0[0].clone()])
    } else {
        Weight(vec![v_w.0[0].clone(), s_w.0[0].clone()])
    };
    let s_hat = s_hat_gl2(&lambda)?;
    let pt = tilde_p(p, alg.p, alg.n)?;
    let t = TensorModule::new(pt.clone(), s_hat.clone())?;
    let pd = ParabolicData::for_levi(alg);
    let supp = if s_hat.is_finite() {
        tmod_support(&t)?
    } else {
        absorbed_support(&pt, &lambda, &Weight::from_ints(&[-1, 1]))?
    };
    let top = p_top(&supp, &pd, window);

    // Support of F: R-weights in the W_m coordinate, S-weight elsewhere.
    let r_supp = tmod_support(&r)?;
    let r_window = Window { lo: vec![window.lo[alg.p].clone()], hi: vec![window.hi[alg.p].clone()], margin: 0 };
    let mut f_support = BTreeSet::new();
    let mut mults = BTreeMap::new();
    let dim_s = s.dim()?;
    for rw in r_supp.enumerate(&r_window) {
        let mut w = Weight::zero(2);
        w.0[alg.p] = rw.0[0].clone();
        w.0[1 - alg.p] = s_w.0[0].clone();
        if !window.contains(&w) {
            continue;
        }
        f_support.insert(w.clone());
        let fm = tmod_mult(&r, &rw, &r_window) * dim_s;
        let tm = tmod_mult(&t, &w, &window.clone());
        mults.insert(w, (tm, fm));
    }
    // Cross-check F's multiplicities against its own basis.
    for l in f.labels_in(&r_window)? {
        let w = f.weight(&l);
        if let Some((_, fm)) = mults.get(&w) {
            if *fm == 0 {
                return Err(Error::Internal(format!("F weight {w} missing from its support")));
            }
        }
    }
    let pass = top == f_support && mults.values().all(|(a, b)| a == b);
    Ok(BackToTensor { tilde_p: pt, s_hat, highest_weight: lambda, top, f_support, mults, pass })
}

impl std::fmt::Display for BackToTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "P~ = {}, S^ = {}, highest weight {}, {} top weights, pass = {}",
            self.tilde_p,
            self.s_hat.desc,
            self.highest_weight,
            self.top.len(),
            self.pass
        )
    }
}
