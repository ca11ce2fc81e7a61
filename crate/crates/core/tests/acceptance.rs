use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wnrep::dmod::{sign_automorphism, DFactor, DModule, DVector, Gen, Label, LineModule, WeylAction, WeylElement};
use wnrep::duality::{dual_tensor, invariance_residual, tensor_invariance_residual};
use wnrep::glmod::{character, sym, wedge, GlModule};
use wnrep::lattice::{finmult_criterion, frac, int, wn_roots_up_to, Scalar, Weight, Window};
use wnrep::levi::{backtotensor_check, FrsModule, KModule, LeviAlg};
use wnrep::linalg::{random_combination, WindowMatrix};
use wnrep::localize::{conjugation_check, twist_action_check, twisted_localize, twisted_localize_lines, TwistData};
use wnrep::tensormod::{
    bracket, derham_complex_residual, derham_d, derham_module, field, mult_table, submodule_closure, tmod_mult,
    TVector, TensorModule,
};

type Outcome = Result<(), String>;

fn criterion(id: &str, name: &str, limit: u64, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let out = body();
    let took = start.elapsed();
    let out = out.and_then(|()| {
        if took <= Duration::from_secs(limit) {
            Ok(())
        } else {
            Err(format!("took {took:.2?}, limit {limit}s"))
        }
    });
    match &out {
        Ok(()) => println!("criterion {id} [{name}]: PASS ({took:.2?})"),
        Err(e) => println!("criterion {id} [{name}]: FAIL ({took:.2?}) {e}"),
    }
    if let Err(e) = out {
        panic!("criterion {id} failed: {e}");
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn kinds() -> Vec<DFactor> {
    vec![DFactor::Poly, DFactor::FPoly, DFactor::Laurent(frac(1, 2))]
}

fn random_dmodule(n: usize, rng: &mut impl Rng) -> DModule {
    let pool = [
        DFactor::Poly,
        DFactor::FPoly,
        DFactor::Laurent(frac(1, 2)),
        DFactor::Laurent(frac(-1, 3)),
        DFactor::Laurent(frac(2, 5)),
    ];
    DModule::new((0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect())
}

fn gen_name(g: Gen) -> &'static str {
    match g {
        Gen::X => "x",
        Gen::D => "d",
    }
}

#[test]
fn c01_weyl_relations() {
    criterion("1", "Weyl relations", 5, || {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = 2;
        let w = Window::radius(n, 6);
        for a in kinds() {
            for b in kinds() {
                let p = DModule::new(vec![a.clone(), b.clone()]);
                let labels = p.labels_in(&w);
                let gen = |g, i| WeylElement::gen(n, i, g);
                for _ in 0..100 {
                    let v = random_combination(&labels, 3, &mut rng);
                    for i in 0..n {
                        for j in 0..n {
                            for (g, h, expect) in [
                                (Gen::D, Gen::X, i == j),
                                (Gen::X, Gen::X, false),
                                (Gen::D, Gen::D, false),
                            ] {
                                let mut r = p.act_weyl(&gen(g, i), &p.act_weyl(&gen(h, j), &v));
                                r.sub(&p.act_weyl(&gen(h, j), &p.act_weyl(&gen(g, i), &v)));
                                if expect {
                                    r.sub(&v);
                                }
                                ensure(r.is_zero(), || {
                                    format!("[{}{}, {}{}] on {p}", gen_name(g), i + 1, gen_name(h), j + 1)
                                })?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn c02_bracket_homomorphism() {
    criterion("2", "W_n bracket homomorphism", 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let modules = [
            TensorModule::new(DModule::new(vec![DFactor::Laurent(frac(1, 2))]), character(vec![frac(1, 3)]).unwrap()),
            TensorModule::new(DModule::polynomial(1), wedge(1, 1).unwrap()),
            TensorModule::new(DModule::new(vec![DFactor::FPoly, DFactor::Laurent(frac(1, 2))]), sym(2, 2)),
            TensorModule::new(DModule::new(vec![DFactor::Poly, DFactor::Laurent(frac(-1, 3))]), wedge(2, 1).unwrap()),
        ];
        for t in modules {
            let t = t.map_err(|e| e.to_string())?;
            let n = t.n();
            let inner = Window::radius(n, 5).with_margin(2).interior();
            let labels: Vec<_> = t.labels_in(&inner).into_iter().filter(|l| inner.contains(&t.weight(l))).collect();
            let roots = wn_roots_up_to(n, 2);
            for _ in 0..100 {
                let x = field(roots[rng.gen_range(0..roots.len())].clone());
                let y = field(roots[rng.gen_range(0..roots.len())].clone());
                let v = random_combination(&labels, 3, &mut rng);
                let mut r = t.act_wn(&x, &t.act_wn(&y, &v));
                r.sub(&t.act_wn(&y, &t.act_wn(&x, &v)));
                r.sub(&t.act_wn(&bracket(&x, &y), &v));
                ensure(r.is_zero(), || format!("bracket fails on {t}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn c03_derham_square_zero() {
    criterion("3", "de Rham d^2 = 0", 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=3 {
            for _ in 0..5 {
                let p = random_dmodule(n, &mut rng);
                let res = derham_complex_residual(&p, &Window::radius(n, 4), 100, &mut rng).map_err(|e| e.to_string())?;
                ensure(res.is_zero(), || format!("d^2 residual {res} on {p}"))?;
            }
        }
        Ok(())
    });
}

/// Counts basis vectors of weight `mu` by looping over both factors directly.
fn count_by_hand(p: &DModule, v: &GlModule, mu: &Weight, radius: i64) -> usize {
    let w = Window::radius(p.n(), radius);
    let mut count = 0;
    for l in p.labels_in(&w) {
        let pw = p.weight(&l);
        if !w.contains(&pw) {
            continue;
        }
        if let Some(vl) = v.label_of_weight(&(mu - &pw)) {
            if w.contains(&v.weight(&vl)) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn c04_finmult_dichotomy() {
    criterion("4", "finite-multiplicity dichotomy", 60, || {
        let p = DModule::new(vec![DFactor::FPoly, DFactor::Poly]);
        let infinite = GlModule::restriction(&DModule::new(vec![DFactor::Poly, DFactor::FPoly]), &int(0)).unwrap();
        let finite = GlModule::restriction(&DModule::new(vec![DFactor::FPoly, DFactor::Poly]), &int(0)).unwrap();
        let sp = p.shadow().map_err(|e| e.to_string())?;
        ensure(!finmult_criterion(&sp, &infinite.shadow().unwrap()).unwrap(), || "criterion says finite".into())?;
        ensure(finmult_criterion(&sp, &finite.shadow().unwrap()).unwrap(), || "criterion says infinite".into())?;

        let ti = TensorModule::new(p.clone(), infinite.clone()).unwrap();
        let tf = TensorModule::new(p.clone(), finite.clone()).unwrap();
        let mu_i = Weight::from_ints(&[0, 0]);
        let mu_f = Weight::from_ints(&[-3, 2]);
        let mut grows = Vec::new();
        let mut flat = Vec::new();
        for r in [3, 6, 9] {
            let a = tmod_mult(&ti, &mu_i, &Window::radius(2, r));
            let b = tmod_mult(&tf, &mu_f, &Window::radius(2, r));
            ensure(a == count_by_hand(&p, &infinite, &mu_i, r), || format!("enumeration mismatch at radius {r}"))?;
            ensure(b == count_by_hand(&p, &finite, &mu_f, r), || format!("enumeration mismatch at radius {r}"))?;
            grows.push(a);
            flat.push(b);
        }
        ensure(grows.windows(2).all(|w| w[0] < w[1]), || format!("not increasing: {grows:?}"))?;
        ensure(flat.windows(2).all(|w| w[0] == w[1]) && flat[0] > 0, || format!("not constant: {flat:?}"))?;
        println!("  multiplicities across radii 3/6/9: {grows:?} and {flat:?}");
        Ok(())
    });
}

#[test]
fn c05_duality() {
    criterion("5", "restricted duality", 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [
            DModule::new(vec![DFactor::Laurent(frac(1, 2))]),
            DModule::new(vec![DFactor::Poly, DFactor::FPoly]),
            DModule::new(vec![DFactor::Laurent(frac(-1, 3)), DFactor::Poly]),
        ] {
            let w = Window::radius(p.n(), 5);
            for r in wn_roots_up_to(p.n(), 2) {
                let res = invariance_residual(&p, &field(r.clone()), &w, 50, &mut rng).map_err(|e| e.to_string())?;
                ensure(res.is_zero(), || format!("pair() residual {res} for {r} on {p}"))?;
            }
        }
        let mut tensors = Vec::new();
        for _ in 0..3 {
            let n = rng.gen_range(1..=2);
            let p = random_dmodule(n, &mut rng);
            let v = match rng.gen_range(0..3) {
                0 => sym(n, rng.gen_range(0..=2)),
                1 => wedge(n, rng.gen_range(0..=n)).unwrap(),
                _ => character(vec![frac(rng.gen_range(-3..=3), 2); n]).unwrap(),
            };
            tensors.push(TensorModule::new(p, v).map_err(|e| e.to_string())?);
        }
        for t in &tensors {
            let w = Window::radius(t.n(), 5);
            for r in wn_roots_up_to(t.n(), 2) {
                let res = tensor_invariance_residual(t, &field(r.clone()), &w, 50, &mut rng).map_err(|e| e.to_string())?;
                ensure(res.is_zero(), || format!("pairing_tensor residual {res} for {r} on {t}"))?;
            }
            let d = dual_tensor(t).map_err(|e| e.to_string())?;
            let ours = mult_table(t, &w);
            let theirs = mult_table(&d, &w);
            let negated: BTreeMap<Weight, usize> = theirs.into_iter().map(|(mu, k)| (-&mu, k)).collect();
            ensure(ours == negated, || format!("dimensions differ between {t} and {d}"))?;
        }
        Ok(())
    });
}

fn action_matrices(m: &LineModule, w: &Window) -> Vec<WindowMatrix<Label>> {
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
fn c06_twisted_localization() {
    criterion("6", "twisted localization", 10, || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let words = [
            WeylElement::x(1, 0),
            WeylElement::d(1, 0),
            WeylElement::from_word(1, &[(0, Gen::D), (0, Gen::D), (0, Gen::X)]),
        ];
        let cases = [
            (DModule::polynomial(1), Gen::X),
            (DModule::new(vec![DFactor::FPoly]), Gen::D),
            (DModule::new(vec![DFactor::Laurent(frac(1, 2))]), Gen::X),
            (DModule::new(vec![DFactor::Laurent(frac(1, 2))]), Gen::D),
        ];
        for (p, g) in &cases {
            for c in [frac(1, 2), frac(-1, 3), int(2)] {
                let t = TwistData::new(0, *g, c.clone());
                for u in &words {
                    let res = twist_action_check(p, &t, u, 5, 50, &mut rng).map_err(|e| e.to_string())?;
                    ensure(res.is_zero(), || format!("twist residual {res} on {p}, c = {c}"))?;
                }
            }
            let t = TwistData::new(0, *g, int(2));
            for u in &words {
                let res = conjugation_check(p, &t, u, 5, 50, &mut rng).map_err(|e| e.to_string())?;
                ensure(res.is_zero(), || format!("conjugation residual {res} on {p}"))?;
            }
        }
        let w = Window::radius(1, 5);
        for (p, g) in &cases {
            for c in [frac(1, 2), frac(-1, 3), int(2)] {
                let once = twisted_localize(p, &TwistData::new(0, *g, c.clone())).map_err(|e| e.to_string())?;
                let back = twisted_localize_lines(&once.module, &TwistData::new(0, *g, -&c)).map_err(|e| e.to_string())?;
                let zero = twisted_localize(p, &TwistData::new(0, *g, int(0))).map_err(|e| e.to_string())?;
                ensure(action_matrices(&back.module, &w) == action_matrices(&zero.module, &w), || {
                    format!("round trip with c = {c} on {p}")
                })?;
            }
        }
        Ok(())
    });
}

#[test]
fn c07_fourier_square() {
    criterion("7", "Fourier square is the sign automorphism", 10, || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let n = rng.gen_range(1..=2);
            let p = random_dmodule(n, &mut rng);
            let twice = p.fourier_twist().fourier_twist();
            let w = Window::radius(n, 5);
            let labels = p.labels_in(&w);
            for i in 0..n {
                for g in [Gen::X, Gen::D] {
                    let u = WeylElement::gen(n, i, g);
                    let s = sign_automorphism(&u);
                    ensure(u.fourier_image(2) == s, || format!("sigma_F^2({}{})", gen_name(g), i + 1))?;
                    let a = WindowMatrix::from_columns(&labels, |l| twice.act_weyl(&u, &DVector::basis(l.clone())));
                    let b = WindowMatrix::from_columns(&labels, |l| p.act_weyl(&s, &DVector::basis(l.clone())));
                    ensure(a == b, || format!("matrix of {}{} on {p} twisted twice", gen_name(g), i + 1))?;
                }
            }
        }
        Ok(())
    });
}

fn cusp() -> DModule {
    DModule::new(vec![DFactor::Laurent(frac(1, 2)), DFactor::Laurent(frac(1, 3))])
}

fn interior_seed(t: &TensorModule, w: &Window, rng: &mut impl Rng) -> TVector {
    let inner = w.interior();
    let labels: Vec<_> = t.labels_in(&inner).into_iter().filter(|l| inner.contains(&t.weight(l))).collect();
    random_combination(&labels, 3, rng)
}

#[test]
fn c08a_closure_saturates() {
    criterion("8a", "closure saturates in T(cusp, sym(2))", 60, || {
        let mut rng = ChaCha8Rng::seed_from_u64(81);
        let t = TensorModule::new(cusp(), sym(2, 2)).unwrap();
        let w = Window::radius(2, 3).with_margin(1);
        for _ in 0..5 {
            let seed = interior_seed(&t, &w, &mut rng);
            let c = submodule_closure(&t, &seed, &w, 2).map_err(|e| e.to_string())?;
            ensure(!c.interior.is_empty() && c.interior.values().all(|&d| d == 3), || {
                format!("interior multiplicities {:?}", c.interior)
            })?;
        }
        Ok(())
    });
}

#[test]
fn c08b_closure_of_constant() {
    criterion("8b", "closure of the constant in T(O*O, wedge(0))", 60, || {
        let t = TensorModule::new(DModule::polynomial(2), wedge(2, 0).unwrap()).unwrap();
        let w = Window::radius(2, 3).with_margin(1);
        let seed = TVector::basis((vec![0, 0], wnrep::glmod::VLabel::Index(0)));
        let c = submodule_closure(&t, &seed, &w, 2).map_err(|e| e.to_string())?;
        ensure(c.total == 1, || format!("closure has {} basis vectors", c.total))?;
        ensure(c.interior.get(&Weight::zero(2)) == Some(&1), || format!("{:?}", c.interior))
    });
}

#[test]
fn c08c_closure_of_d_image() {
    criterion("8c", "closure of a d-image seed in T(cusp, wedge(1))", 60, || {
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        let t0 = derham_module(&cusp(), 0).unwrap();
        let t1 = derham_module(&cusp(), 1).unwrap();
        let w = Window::radius(2, 3).with_margin(1);
        let seed = derham_d(&t0, &interior_seed(&t0, &w, &mut rng)).map_err(|e| e.to_string())?;
        let c = submodule_closure(&t1, &seed, &w, 2).map_err(|e| e.to_string())?;
        let full = mult_table(&t1, &w.interior());
        ensure(!c.interior.is_empty() && c.interior.values().all(|&d| d == 1), || format!("{:?}", c.interior))?;
        ensure(full.values().all(|&d| d == 2), || format!("module multiplicities {full:?}"))
    });
}

#[test]
fn c09_levi() {
    criterion("9", "Levi axioms and the tensor comparison", 60, || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let ch = |c: Scalar| character(vec![c]).unwrap();
        let cases = [
            (LeviAlg::new(2, 1, 1).unwrap(), DModule::polynomial(1), ch(int(0)), vec![ch(int(1))]),
            (
                LeviAlg::new(3, 1, 1).unwrap(),
                DModule::new(vec![DFactor::Laurent(frac(1, 2))]),
                ch(frac(1, 3)),
                vec![ch(int(1)), ch(int(-2))],
            ),
            (
                LeviAlg::new(4, 0, 2).unwrap(),
                DModule::new(vec![DFactor::FPoly, DFactor::Poly]),
                wedge(2, 1).unwrap(),
                vec![wedge(2, 1).unwrap()],
            ),
        ];
        for (alg, p, v, s) in cases {
            let f = FrsModule::new(alg, TensorModule::new(p, v).unwrap(), KModule { blocks: s }).map_err(|e| e.to_string())?;
            let res = f.check_g_axioms(&Window::radius(alg.m, 4), 50, &mut rng).map_err(|e| e.to_string())?;
            ensure(res.is_zero(), || format!("axiom residual {res} for n={} p={} m={}", alg.n, alg.p, alg.m))?;
        }
        let alg = LeviAlg::new(2, 1, 1).unwrap();
        let rep = backtotensor_check(
            &alg,
            &DModule::new(vec![DFactor::Laurent(frac(1, 2))]),
            &ch(frac(1, 3)),
            &KModule { blocks: vec![ch(int(1))] },
            &Window::radius(2, 4),
        )
        .map_err(|e| e.to_string())?;
        ensure(rep.top == rep.f_support && !rep.top.is_empty(), || format!("supports differ\n{rep}"))?;
        ensure(rep.mults.values().all(|(a, b)| a == b), || format!("multiplicities differ\n{rep}"))?;
        ensure(rep.pass, || format!("{rep}"))
    });
}

fn run_cli(args: &[&str], threads: Option<&str>) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wnrep"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("WNREP_THREADS", t);
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("{args:?} exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout))
    })?;
    Ok(out.stdout)
}

#[test]
fn c10_cli_determinism() {
    criterion("10", "CLI determinism", 10, || {
        let runs: [&[&str]; 3] = [
            &["mult", "--P", "O*XL(1/2)", "--V", "sym(2)", "--window", "3"],
            &["dualize", "--P", "OF*XL(1/3)", "--V", "wedge(1)", "--window", "3", "--seed", "4"],
            &["closure", "--P", "XL(1/2)*XL(1/3)", "--V", "sym(2)", "--window", "3", "--seed", "2"],
        ];
        for args in runs {
            let first = run_cli(args, None)?;
            for _ in 0..2 {
                ensure(run_cli(args, None)? == first, || format!("{args:?} differs between runs"))?;
            }
            ensure(run_cli(args, Some("1"))? == first, || format!("{args:?} differs with 1 thread"))?;
            ensure(run_cli(args, Some("4"))? == first, || format!("{args:?} differs with 4 threads"))?;
        }
        Ok(())
    });
}
