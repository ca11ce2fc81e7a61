//! Restricted duals of weight modules and the explicit invariant pairings.
//!
//! `P` pairs with `T(P^F, wedge(n))`, realized on the Fourier-twisted basis
//! `f(mu)` of `P`, by `<e(mu), f(nu)> = phi(mu) delta(mu, nu)`. Here `phi` is the
//! product over coordinates of `phi_i(0) = 1` and
//! `phi_i(k+1) = (w_k + 1) phi_i(k)` when `x_i` shifts up (`w_k` the coordinate
//! weight of `e(k)`), `phi_i(k+1) = -(k+1) phi_i(k)` when `d_i` shifts up.

use num_traits::{One, Zero};
use rand::Rng;

use crate::dmod::{DFactor, DModule, DVector, Label};
use crate::error::{Error, Result};
use crate::glmod::{dual_gl, tensor_gl, wedge, VLabel};
use crate::lattice::{int, Scalar, Weight, Window};
use crate::linalg::{random_combination, rank, Vector};
use crate::tensormod::{TLabel, TVector, TensorModule, VectorField};

/// `phi(mu)` for an untwisted module `P`.
pub fn phi_value(p: &DModule, label: &Label) -> Scalar {
    let mut out = Scalar::one();
    for (f, &k) in p.factors.iter().zip(label) {
        match f {
            DFactor::FPoly => {
                for t in 0..k {
                    out *= int(-(t + 1));
                }
            }
            DFactor::Poly | DFactor::Laurent(_) => {
                let lam = match f {
                    DFactor::Laurent(l) => l.clone(),
                    _ => Scalar::zero(),
                };
                // phi(t+1) / phi(t) = lam + t + 1
                if k > 0 {
                    for t in 0..k {
                        out *= &lam + int(t + 1);
                    }
                } else {
                    for t in k..0 {
                        out /= &lam + int(t + 1);
                    }
                }
            }
        }
    }
    out
}

/// `T(P.fourier_twist(), wedge(n, n))`: the module paired with `P`.
pub fn pairing_partner(p: &DModule) -> Result<TensorModule> {
    if p.fourier != 0 {
        return Err(Error::Unsupported("pairing for a Fourier-twisted module".into()));
    }
    TensorModule::new(p.fourier_twist(), wedge(p.n(), p.n())?)
}

/// `<u, w>` for `u` in `P` and `w` in `T(P.fourier_twist(), wedge(n, n))`.
pub fn pair(p: &DModule, u: &DVector, w: &TVector) -> Scalar {
    let mut out = Scalar::zero();
    for (l, c) in u.iter() {
        let d = w.coeff(&(l.clone(), VLabel::Index(0)));
        if !d.is_zero() {
            out += c * d * phi_value(p, l);
        }
    }
    out
}

/// `P` as the `W_n`-module `T(P, wedge(n, 0))`.
pub fn as_wn_module(p: &DModule) -> Result<TensorModule> {
    TensorModule::new(p.clone(), wedge(p.n(), 0)?)
}

fn embed(u: &DVector) -> TVector {
    Vector::from_terms(u.iter().map(|(l, c)| ((l.clone(), VLabel::Index(0)), c.clone())))
}

fn project(v: &TVector) -> DVector {
    Vector::from_terms(v.iter().map(|((l, _), c)| (l.clone(), c.clone())))
}

/// Largest `|<X u, w> + <u, X w>|` over random samples in a window.
pub fn invariance_residual(
    p: &DModule,
    x: &VectorField,
    window: &Window,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<Scalar> {
    let tp = as_wn_module(p)?;
    let partner = pairing_partner(p)?;
    let ul = p.labels_in(window);
    let wl = partner.labels_in(window);
    let mut worst = Scalar::zero();
    for _ in 0..samples {
        let u = random_combination(&ul, 3, rng);
        let w = random_combination(&wl, 3, rng);
        let xu = project(&tp.act_wn(x, &embed(&u)));
        let xw = partner.act_wn(x, &w);
        let r = pair(p, &xu, &w) + pair(p, &u, &xw);
        worst = worst.max(if r < Scalar::zero() { -r } else { r });
    }
    Ok(worst)
}

/// The restricted dual `T(P^F, V_* (x) wedge(n, n))` in swapped-kind form.
pub fn dual_tensor(t: &TensorModule) -> Result<TensorModule> {
    let n = t.n();
    TensorModule::new(t.p.fourier(), tensor_gl(&dual_gl(&t.v), &wedge(n, n)?)?)
}

/// The same dual on the twisted basis `f(mu)` of `P`, where the pairing is diagonal.
pub fn dual_model(t: &TensorModule) -> Result<TensorModule> {
    if !t.v.is_finite() {
        return Err(Error::Unsupported("pairing with an infinite-dimensional V".into()));
    }
    let n = t.n();
    TensorModule::new(t.p.fourier_twist(), tensor_gl(&dual_gl(&t.v), &wedge(n, n)?)?)
}

/// `<f (x) v_a, g (x) w_b> = <f, g> delta(a, b)` between `T` and `dual_model(T)`.
pub fn pairing_tensor(t: &TensorModule, fv: &TVector, gw: &TVector) -> Scalar {
    let mut out = Scalar::zero();
    for ((l, v), c) in fv.iter() {
        let d = gw.coeff(&(l.clone(), v.clone()));
        if !d.is_zero() {
            out += c * d * phi_value(&t.p, l);
        }
    }
    out
}

/// Largest `|<X a, b> + <a, X b>|` for the tensor pairing.
pub fn tensor_invariance_residual(
    t: &TensorModule,
    x: &VectorField,
    window: &Window,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<Scalar> {
    let d = dual_model(t)?;
    let al = t.labels_in(window);
    let bl = d.labels_in(window);
    let mut worst = Scalar::zero();
    for _ in 0..samples {
        let a = random_combination(&al, 3, rng);
        let b = random_combination(&bl, 3, rng);
        let r = pairing_tensor(t, &t.act_wn(x, &a), &b) + pairing_tensor(t, &a, &d.act_wn(x, &b));
        worst = worst.max(if r < Scalar::zero() { -r } else { r });
    }
    Ok(worst)
}

/// Whether the pairing between `T^mu` and the dual's `-mu` space is square and
/// invertible.
pub fn weight_perfect(t: &TensorModule, mu: &Weight, window: &Window) -> Result<bool> {
    let d = dual_model(t)?;
    let rows: Vec<TLabel> = t.labels_of_weight(mu, window);
    let cols: Vec<TLabel> = d.labels_of_weight(&-mu, window);
    if rows.len() != cols.len() {
        return Ok(false);
    }
    let m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| pairing_tensor(t, &TVector::basis(r.clone()), &TVector::basis(c.clone())))
                .collect()
        })
        .collect();
    Ok(rank(&m) == rows.len())
}
