//! Weight modules over `gl(n)`.
//!
//! Finite-dimensional modules are stored explicitly (weights plus sparse
//! matrices for every `E_ij`). Infinite-dimensional ones come from an
//! eigenspace of `sum x_i d_i` in a weight `D_n`-module, where `E_ij = x_i d_j`,
//! possibly dualized and twisted by a one-dimensional character.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::dmod::{DModule, Gen, Label, WeylAction};
use crate::error::{Error, Result};
use crate::lattice::{fmt_scalar, int, multi_indices, Scalar, Shadow, Weight, Window};
use crate::linalg::Vector;

/// Basis label of a `gl(n)`-module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VLabel {
    /// Index into the basis of a finite-dimensional module.
    Index(usize),
    /// Basis vector `e(mu)` of the parent D-module of a restriction.
    D(Label),
}

impl fmt::Display for VLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VLabel::Index(i) => write!(f, "v{i}"),
            VLabel::D(l) => {
                let parts: Vec<String> = l.iter().map(|k| k.to_string()).collect();
                write!(f, "e({})", parts.join(","))
            }
        }
    }
}

pub type VVector = Vector<VLabel>;

/// How a module was built; printed in descriptor syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlDesc {
    Wedge(usize),
    Sym(usize),
    Char(Vec<Scalar>),
    Dual(Box<GlDesc>),
    Tensor(Box<GlDesc>, Box<GlDesc>),
    ResD(DModule, Scalar),
}

impl fmt::Display for GlDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlDesc::Wedge(k) => write!(f, "wedge({k})"),
            GlDesc::Sym(k) => write!(f, "sym({k})"),
            GlDesc::Char(c) => {
                let parts: Vec<String> = c.iter().map(fmt_scalar).collect();
                write!(f, "char({})", parts.join(","))
            }
            GlDesc::Dual(g) => write!(f, "dual({g})"),
            GlDesc::Tensor(a, b) => write!(f, "{a}#{b}"),
            GlDesc::ResD(p, k) => write!(f, "resD({p};{})", fmt_scalar(k)),
        }
    }
}

/// Columns of a sparse matrix: `cols[c]` lists `(row, coefficient)`.
type Matrix = Vec<Vec<(usize, Scalar)>>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Finite {
        weights: Vec<Weight>,
        /// `ops[i * n + j]` is the matrix of `E_ij`.
        ops: Vec<Matrix>,
    },
    Restriction {
        parent: DModule,
        kappa: Scalar,
        dual: bool,
        shift: Weight,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlModule {
    n: usize,
    kind: Kind,
    pub desc: GlDesc,
}

impl GlModule {
    fn finite(n: usize, weights: Vec<Weight>, desc: GlDesc, f: impl Fn(usize, usize, usize) -> Vec<(usize, Scalar)>) -> Self {
        let d = weights.len();
        let mut ops = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                ops.push((0..d).map(|c| f(i, j, c)).collect());
            }
        }
        GlModule { n, kind: Kind::Finite { weights, ops }, desc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, Kind::Finite { .. })
    }

    pub fn dim(&self) -> Option<usize> {
        match &self.kind {
            Kind::Finite { weights, .. } => Some(weights.len()),
            Kind::Restriction { .. } => None,
        }
    }

    /// All basis labels of a finite-dimensional module.
    pub fn labels(&self) -> Option<Vec<VLabel>> {
        self.dim().map(|d| (0..d).map(VLabel::Index).collect())
    }

    fn parent_weight(&self, w: &Weight) -> Weight {
        match &self.kind {
            Kind::Restriction { dual, shift, .. } => {
                let v = w - shift;
                if *dual {
                    -&v
                } else {
                    v
                }
            }
            Kind::Finite { .. } => w.clone(),
        }
    }

    pub fn weight(&self, label: &VLabel) -> Weight {
        match (&self.kind, label) {
            (Kind::Finite { weights, .. }, VLabel::Index(i)) => weights[*i].clone(),
            (Kind::Restriction { parent, dual, shift, .. }, VLabel::D(l)) => {
                let w = parent.weight(l);
                let w = if *dual { -&w } else { w };
                &w + shift
            }
            _ => panic!("label {label} does not belong to {}", self.desc),
        }
    }

    pub fn valid(&self, label: &VLabel) -> bool {
        match (&self.kind, label) {
            (Kind::Finite { weights, .. }, VLabel::Index(i)) => *i < weights.len(),
            (Kind::Restriction { parent, kappa, .. }, VLabel::D(l)) => {
                parent.valid(l) && parent.weight(l).sum() == *kappa
            }
            _ => false,
        }
    }

    /// Label of weight `w` in a restriction module (weight spaces there are
    /// one-dimensional).
    pub fn label_of_weight(&self, w: &Weight) -> Option<VLabel> {
        match &self.kind {
            Kind::Restriction { parent, kappa, .. } => {
                let pw = self.parent_weight(w);
                (pw.sum() == *kappa).then(|| parent.label_of_weight(&pw).map(VLabel::D))?
            }
            Kind::Finite { weights, .. } => weights.iter().position(|x| x == w).map(VLabel::Index),
        }
    }

    /// Basis labels whose weight lies in the window. For finite modules this
    /// is every label with weight in the window.
    pub fn labels_in(&self, window: &Window) -> Vec<VLabel> {
        match &self.kind {
            Kind::Finite { weights, .. } => (0..weights.len())
                .filter(|&i| window.contains(&weights[i]))
                .map(VLabel::Index)
                .collect(),
            Kind::Restriction { parent, kappa, dual, shift } => {
                let n = self.n;
                let (lo, hi): (Vec<Scalar>, Vec<Scalar>) = (0..n)
                    .map(|i| {
                        let a = &window.lo[i] - &shift.0[i];
                        let b = &window.hi[i] - &shift.0[i];
                        if *dual {
                            (-b, -a)
                        } else {
                            (a, b)
                        }
                    })
                    .unzip();
                let pw = Window { lo, hi, margin: 0 };
                parent
                    .labels_in(&pw)
                    .into_iter()
                    .filter(|l| parent.weight(l).sum() == *kappa)
                    .map(VLabel::D)
                    .collect()
            }
        }
    }

    /// `E_ij` applied to a basis vector.
    pub fn act_e(&self, i: usize, j: usize, label: &VLabel) -> VVector {
        match (&self.kind, label) {
            (Kind::Finite { ops, .. }, VLabel::Index(c)) => {
                VVector::from_terms(ops[i * self.n + j][*c].iter().map(|(r, s)| (VLabel::Index(*r), s.clone())))
            }
            (Kind::Restriction { parent, dual: false, .. }, VLabel::D(l)) => {
                match x_d(parent, i, j, l) {
                    Some((l2, c)) => VVector::from_terms([(VLabel::D(l2), c)]),
                    None => VVector::new(),
                }
            }
            (Kind::Restriction { parent, dual: true, .. }, VLabel::D(l)) => {
                // -E_ij^T: the source of the transposed entry sits at parent
                // weight wt(l) - (e_i - e_j).
                let mut w = parent.weight(l);
                w.0[i] -= int(1);
                w.0[j] += int(1);
                let Some(src) = parent.label_of_weight(&w) else {
                    return VVector::new();
                };
                match x_d(parent, i, j, &src) {
                    Some((l2, c)) if &l2 == l => VVector::from_terms([(VLabel::D(src), -c)]),
                    _ => VVector::new(),
                }
            }
            _ => panic!("label {label} does not belong to {}", self.desc),
        }
    }

    pub fn act_e_vec(&self, i: usize, j: usize, v: &VVector) -> VVector {
        v.map_linear(|l| self.act_e(i, j, l))
    }

    pub fn shadow(&self) -> Result<Shadow> {
        match &self.kind {
            Kind::Finite { .. } => Ok(Shadow::all_finite(self.n)),
            Kind::Restriction { parent, dual, .. } => {
                let s = parent.shadow()?;
                Ok(if *dual { s.negated() } else { s })
            }
        }
    }

    /// `k` if this module has the character of `wedge(n, k)`.
    pub fn fundamental_degree(&self) -> Option<usize> {
        let Kind::Finite { weights, .. } = &self.kind else {
            return None;
        };
        let mut mine = weights.clone();
        mine.sort();
        (0..=self.n).find(|&k| {
            let w = wedge(self.n, k).expect("k in range");
            let Kind::Finite { weights: mut theirs, .. } = w.kind else { unreachable!() };
            theirs.sort();
            theirs == mine
        })
    }

    /// Checks weight shifts and `[E_ij, E_kl] = d_jk E_il - d_li E_kj` on the
    /// given basis labels.
    pub fn check_commutators(&self, labels: &[VLabel]) -> Result<()> {
        let n = self.n;
        for l in labels {
            let wl = self.weight(l);
            let v = VVector::basis(l.clone());
            for i in 0..n {
                for j in 0..n {
                    let e = self.act_e(i, j, l);
                    let mut shift = Weight::zero(n);
                    shift.0[i] += int(1);
                    shift.0[j] -= int(1);
                    let target = &wl + &shift;
                    if e.keys().any(|k| self.weight(k) != target) {
                        return Err(Error::Validation(format!("E_{}{} breaks the weight grading at {l}", i + 1, j + 1)));
                    }
                    for k in 0..n {
                        for m in 0..n {
                            let mut lhs = self.act_e_vec(i, j, &self.act_e_vec(k, m, &v));
                            lhs.sub(&self.act_e_vec(k, m, &self.act_e_vec(i, j, &v)));
                            let mut rhs = VVector::new();
                            if j == k {
                                rhs.add(&self.act_e(i, m, l));
                            }
                            if m == i {
                                rhs.sub(&self.act_e(k, j, l));
                            }
                            if lhs != rhs {
                                return Err(Error::Validation(format!(
                                    "[E_{}{}, E_{}{}] fails at {l} in {}",
                                    i + 1,
                                    j + 1,
                                    k + 1,
                                    m + 1,
                                    self.desc
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Restriction of `P` to the `kappa`-eigenspace of `sum x_i d_i`.
    pub fn restriction(p: &DModule, kappa: &Scalar) -> Result<GlModule> {
        let cone = &p.support().cones[0];
        let offset = kappa - cone.base.sum();
        let empty = || Error::EmptyModule(format!("{p} at {}", fmt_scalar(kappa)));
        if !offset.is_integer() {
            return Err(empty());
        }
        use crate::lattice::Mode;
        if !cone.modes.contains(&Mode::Full) {
            let has_pos = cone.modes.contains(&Mode::NonNeg);
            let has_neg = cone.modes.contains(&Mode::NonPos);
            if (!has_pos && offset > Scalar::zero()) || (!has_neg && offset < Scalar::zero()) {
                return Err(empty());
            }
        }
        Ok(GlModule {
            n: p.n(),
            kind: Kind::Restriction { parent: p.clone(), kappa: kappa.clone(), dual: false, shift: Weight::zero(p.n()) },
            desc: GlDesc::ResD(p.clone(), kappa.clone()),
        })
    }
}

/// `x_i d_j e(l)` as a single term.
fn x_d(p: &DModule, i: usize, j: usize, l: &Label) -> Option<(Label, Scalar)> {
    let (l1, c1) = p.act_gen(j, Gen::D, l)?;
    let (l2, c2) = p.act_gen(i, Gen::X, &l1)?;
    Some((l2, c1 * c2))
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `k`-th exterior power of the natural representation, basis `e_S` for
/// lexicographically ordered subsets `S`.
pub fn wedge(n: usize, k: usize) -> Result<GlModule> {
    if k > n {
        return Err(Error::Range { what: "exterior power degree", index: k });
    }
    let subs = subsets(n, k);
    let index: BTreeMap<Vec<usize>, usize> = subs.iter().cloned().enumerate().map(|(a, b)| (b, a)).collect();
    let weights = subs
        .iter()
        .map(|s| {
            let mut w = Weight::zero(n);
            for &i in s {
                w.0[i] = int(1);
            }
            w
        })
        .collect();
    Ok(GlModule::finite(n, weights, GlDesc::Wedge(k), |i, j, c| {
        let s = &subs[c];
        if !s.contains(&j) {
            return vec![];
        }
        if i == j {
            return vec![(c, int(1))];
        }
        if s.contains(&i) {
            return vec![];
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let between = s.iter().filter(|&&t| lo < t && t < hi).count();
        let mut t: Vec<usize> = s.iter().map(|&x| if x == j { i } else { x }).collect();
        t.sort();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        vec![(index[&t], int(sign))]
    }))
}

/// Index of the basis vector `e_S` in `wedge(n, |S|)`.
pub fn wedge_index(n: usize, s: &[usize]) -> usize {
    subsets(n, s.len()).iter().position(|t| t == s).expect("sorted subset")
}

/// Degree-`k` polynomials in `e_1..e_n` with `E_ij = e_i d/de_j`.
pub fn sym(n: usize, k: usize) -> GlModule {
    let monos = multi_indices(n, k as u32);
    let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(a, b)| (b, a)).collect();
    let weights = monos.iter().map(|a| Weight(a.iter().map(|&x| int(x as i64)).collect())).collect();
    GlModule::finite(n, weights, GlDesc::Sym(k), |i, j, c| {
        let a = &monos[c];
        if a[j] == 0 {
            return vec![];
        }
        let mut b = a.clone();
        b[j] -= 1;
        b[i] += 1;
        vec![(index[&b], int(a[j] as i64))]
    })
}

/// One-dimensional module of weight `c`. Off-diagonal `E_ij` act by zero,
/// which is a `gl(n)`-action only for constant `c`.
pub fn character(c: Vec<Scalar>) -> Result<GlModule> {
    if c.iter().any(|x| *x != c[0]) {
        return Err(Error::Validation(format!(
            "char({}) is not a gl(n)-module: the weight must be constant",
            c.iter().map(fmt_scalar).collect::<Vec<_>>().join(",")
        )));
    }
    let n = c.len();
    let w = Weight(c.clone());
    Ok(GlModule::finite(n, vec![w.clone()], GlDesc::Char(c), |i, j, _| {
        if i == j {
            vec![(0, w.0[i].clone())]
        } else {
            vec![]
        }
    }))
}

/// Restricted dual: weights negated, `E_ij` acting by `-E_ij^T`.
pub fn dual_gl(v: &GlModule) -> GlModule {
    let desc = GlDesc::Dual(Box::new(v.desc.clone()));
    match &v.kind {
        Kind::Finite { weights, ops } => {
            let n = v.n;
            let d = weights.len();
            let mut t: Vec<Matrix> = vec![vec![Vec::new(); d]; n * n];
            for (k, m) in ops.iter().enumerate() {
                for (c, col) in m.iter().enumerate() {
                    for (r, s) in col {
                        t[k][*r].push((c, -s));
                    }
                }
            }
            GlModule { n, kind: Kind::Finite { weights: weights.iter().map(|w| -w).collect(), ops: t }, desc }
        }
        Kind::Restriction { parent, kappa, dual, shift } => GlModule {
            n: v.n,
            kind: Kind::Restriction { parent: parent.clone(), kappa: kappa.clone(), dual: !dual, shift: -shift },
            desc,
        },
    }
}

/// Tensor product with the Leibniz action. A restriction can only be
/// tensored with a one-dimensional module.
pub fn tensor_gl(v: &GlModule, w: &GlModule) -> Result<GlModule> {
    if v.n != w.n {
        return Err(Error::Dimension { expected: v.n, got: w.n });
    }
    let n = v.n;
    let desc = GlDesc::Tensor(Box::new(v.desc.clone()), Box::new(w.desc.clone()));
    match (&v.kind, &w.kind) {
        (Kind::Finite { weights: wa, .. }, Kind::Finite { weights: wb, .. }) => {
            let (da, db) = (wa.len(), wb.len());
            let weights = (0..da * db).map(|c| &wa[c / db] + &wb[c % db]).collect();
            Ok(GlModule::finite(n, weights, desc, |i, j, c| {
                let (a, b) = (c / db, c % db);
                let mut out = Vec::new();
                for (t, s) in v.act_e(i, j, &VLabel::Index(a)).iter() {
                    let VLabel::Index(t) = t else { unreachable!() };
                    out.push((t * db + b, s.clone()));
                }
                for (t, s) in w.act_e(i, j, &VLabel::Index(b)).iter() {
                    let VLabel::Index(t) = t else { unreachable!() };
                    out.push((a * db + t, s.clone()));
                }
                out
            }))
        }
        (Kind::Restriction { .. }, Kind::Finite { weights, .. }) if weights.len() == 1 => {
            Ok(twist_restriction(v, &weights[0], desc))
        }
        (Kind::Finite { weights, .. }, Kind::Restriction { .. }) if weights.len() == 1 => {
            Ok(twist_restriction(w, &weights[0], desc))
        }
        _ => Err(Error::Unsupported(format!(
            "tensor product {desc}: an infinite-dimensional factor needs a one-dimensional partner"
        ))),
    }
}

fn twist_restriction(v: &GlModule, by: &Weight, desc: GlDesc) -> GlModule {
    let Kind::Restriction { parent, kappa, dual, shift } = &v.kind else { unreachable!() };
    GlModule {
        n: v.n,
        kind: Kind::Restriction { parent: parent.clone(), kappa: kappa.clone(), dual: *dual, shift: shift + by },
        desc,
    }
}

/// Number of basis labels of weight `mu` inside the window.
pub fn gl_weight_mult(v: &GlModule, mu: &Weight, window: &Window) -> usize {
    if !window.contains(mu) {
        return 0;
    }
    match &v.kind {
        Kind::Finite { weights, .. } => weights.iter().filter(|w| *w == mu).count(),
        Kind::Restriction { .. } => usize::from(v.label_of_weight(mu).is_some()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dmod::DFactor;
    use crate::lattice::frac;

    fn idx(i: usize) -> VLabel {
        VLabel::Index(i)
    }

    #[test]
    fn wedge_examples() {
        let w = wedge(2, 1).unwrap();
        assert_eq!(w.act_e(1, 0, &idx(0)), VVector::basis(idx(1)));
        let w = wedge(3, 3).unwrap();
        assert_eq!(w.weight(&idx(0)), Weight::from_ints(&[1, 1, 1]));
        for i in 0..3 {
            for j in 0..3 {
                let e = w.act_e(i, j, &idx(0));
                if i == j {
                    assert_eq!(e, VVector::basis(idx(0)));
                } else {
                    assert!(e.is_zero());
                }
            }
        }
        let w = wedge(2, 0).unwrap();
        assert_eq!(w.weight(&idx(0)), Weight::zero(2));
        assert!(wedge(2, 3).is_err());
    }

    #[test]
    fn sym_examples() {
        let s = sym(2, 2);
        // monomials (0,2), (1,1), (2,0)
        let e22 = s.label_of_weight(&Weight::from_ints(&[0, 2])).unwrap();
        let e12 = s.label_of_weight(&Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(s.act_e(0, 1, &e22), VVector::from_terms([(e12, int(2))]));
        let w = Window::radius(2, 3);
        for mu in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(gl_weight_mult(&s, &Weight::from_ints(&mu), &w), 1);
        }
        assert_eq!(sym(3, 1).fundamental_degree(), Some(1));
    }

    #[test]
    fn characters_and_duals() {
        let c = character(vec![frac(1, 2)]).unwrap();
        assert_eq!(c.weight(&idx(0)), Weight(vec![frac(1, 2)]));
        assert!(character(vec![int(1), int(2)]).is_err());
        let d = dual_gl(&character(vec![int(3), int(3)]).unwrap());
        assert_eq!(d.weight(&idx(0)), Weight::from_ints(&[-3, -3]));
        let w = wedge(3, 2).unwrap();
        let dw = dual_gl(&w);
        for l in w.labels().unwrap() {
            assert_eq!(dw.weight(&l), -&w.weight(&l));
        }
        dw.check_commutators(&dw.labels().unwrap()).unwrap();
        assert_eq!(dual_gl(&dw), w.clone().with_desc(dual_gl(&dw).desc));
        assert_eq!(gl_weight_mult(&w, &Weight::from_ints(&[1, 1, 0]), &Window::radius(3, 2)), 1);
    }

    impl GlModule {
        fn with_desc(mut self, d: GlDesc) -> Self {
            self.desc = d;
            self
        }
    }

    #[test]
    fn tensor_weights() {
        let w = wedge(2, 1).unwrap();
        let t = tensor_gl(&w, &w).unwrap();
        let mut ws: Vec<Weight> = t.labels().unwrap().iter().map(|l| t.weight(l)).collect();
        ws.sort();
        let expect: Vec<Weight> = [[0, 2], [1, 1], [1, 1], [2, 0]].iter().map(|a| Weight::from_ints(a)).collect();
        assert_eq!(ws, expect);
        t.check_commutators(&t.labels().unwrap()).unwrap();
        let dv = tensor_gl(&dual_gl(&w), &w).unwrap();
        assert_eq!(gl_weight_mult(&dv, &Weight::zero(2), &Window::radius(2, 2)), 2);
    }

    #[test]
    fn restrictions() {
        let r = GlModule::restriction(&DModule::polynomial(2), &int(1)).unwrap();
        let labels = r.labels_in(&Window::radius(2, 3));
        assert_eq!(labels, vec![VLabel::D(vec![0, 1]), VLabel::D(vec![1, 0])]);
        assert_eq!(r.act_e(1, 0, &VLabel::D(vec![1, 0])), VVector::basis(VLabel::D(vec![0, 1])));
        r.check_commutators(&labels).unwrap();
        assert_eq!(gl_weight_mult(&r, &Weight::from_ints(&[1, 0]), &Window::radius(2, 3)), 1);

        let r = GlModule::restriction(&DModule::polynomial(1), &int(5)).unwrap();
        assert_eq!(r.labels_in(&Window::radius(1, 6)).len(), 1);
        assert!(GlModule::restriction(&DModule::polynomial(1), &int(-1)).is_err());
        assert!(GlModule::restriction(&DModule::polynomial(1), &frac(1, 2)).is_err());

        let p = DModule::new(vec![DFactor::Poly, DFactor::FPoly]);
        let r = GlModule::restriction(&p, &int(2)).unwrap();
        let s = r.shadow().unwrap();
        assert_eq!(s.plus, [(1, 0)].into_iter().collect());
        let labels = r.labels_in(&Window::radius(2, 8));
        r.check_commutators(&labels).unwrap();
        // E_21 kills the bottom of the string, E_12 never does.
        assert!(labels.iter().all(|l| !r.act_e(0, 1, l).is_zero()));
        assert!(labels.iter().any(|l| r.act_e(1, 0, l).is_zero()));

        let d = dual_gl(&r);
        d.check_commutators(&d.labels_in(&Window::radius(2, 8))).unwrap();
        assert_eq!(d.shadow().unwrap().plus, [(0, 1)].into_iter().collect());
        let t = tensor_gl(&d, &character(vec![int(1), int(1)]).unwrap()).unwrap();
        t.check_commutators(&t.labels_in(&Window::radius(2, 8))).unwrap();
        assert!(tensor_gl(&r, &wedge(2, 1).unwrap()).is_err());
    }
}
