//! Acceptance criteria 1 to 11, one PASS/FAIL line each. All checks are exact.
//!
//! `WB_SEED` shifts every random stream (default 0).

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use wb_cli::format::{self, Value};
use wb_core::adjlift::{
    certify_lifted_adjunction, factor_comonad, graded_dims, graded_hom_oracle, kelly_lax_to_oplax,
    kelly_oplax_to_lax, mapping_comodule_data, verify_tce, AdjunctionData,
};
use wb_core::comodcat::{
    check_coequalizer_universal, check_equalizer_universal, check_product_universal, cofree, comodule_coequalizer,
    comodule_hom_space, is_comodule_morphism, module_coequalizer, module_hom_space, Comodule, ComoduleMorphism,
    ModuleMorphism,
};
use wb_core::dgchain::{transfer_iso_check, Pairing};
use wb_core::exactlin::{coequalizer, solve_right_factor, LinMap, Scalar};
use wb_core::hopf::{
    comodule_tensor, convolution_algebra, lifted_tensor_report, sign_idempotents, unit_comodule, ConvolutionAlgebra,
};
use wb_core::oplaxfun::{extract_oplax, lift_comodule, lifted_cofree_coaction, nt_lifts, OplaxStructure};
use wb_core::random::{self, combination, invertible, matrix, WbRng};
use wb_core::structures::{groups, FinAlgebra, FinBialgebra};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn seed() -> u64 {
    std::env::var("WB_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0)
}

fn rng_for(criterion: u64) -> WbRng {
    random::seeded(seed().wrapping_mul(1000).wrapping_add(criterion))
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn kz2() -> FinBialgebra {
    FinBialgebra::group(&groups::cyclic(2))
}

fn klein() -> FinBialgebra {
    FinBialgebra::group(&groups::klein())
}

fn morphism(rng: &mut WbRng, v: &Comodule, w: &Comodule) -> ComoduleMorphism {
    let basis = comodule_hom_space(v, w).unwrap();
    ComoduleMorphism::new(v.clone(), w.clone(), combination(rng, &basis, w.dim(), v.dim())).unwrap()
}

/// `b̂[(k,β),(α,c)] = Σ_{a,y} G[α,y]·b[(y,k),(c,a)]·G⁻¹[a,β]`, entry by entry.
fn oracle_kelly(g: &LinMap, s: &OplaxStructure) -> LinMap {
    let ginv = g.inverse().unwrap();
    let (c, d, w) = (s.source().dim(), s.target().dim(), s.carrier());
    LinMap::from_fn(d * w, w * c, |row, col| {
        let (k, beta) = (row / w, row % w);
        let (alpha, ci) = (col / c, col % c);
        let mut acc = Scalar::zero();
        for a in 0..w {
            for y in 0..w {
                acc += &(&(g.get(alpha, y) * s.b().get(y * d + k, ci * w + a)) * ginv.get(a, beta));
            }
        }
        acc
    })
}

// ---------------------------------------------------------------------------

fn c1_lifting_bijection() -> Outcome {
    let mut rng = rng_for(1);
    let mut largest = (0, 0, 0);
    for case in 0..100 {
        let s = random::oplax(&mut rng, 3, 3);
        largest = largest.max((s.source().dim(), s.carrier(), s.target().dim()));
        ensure!(s.validate().is_ok(), "case {case}: generator produced an invalid structure");
        let rho = lifted_cofree_coaction(&s);
        ensure!(
            lift_comodule(&s, &cofree(s.source(), 1)).map_err(|e| e.to_string())?.coaction() == &rho,
            "case {case}: lift of cofree(ground) differs from the lifted cofree coaction"
        );
        let back = extract_oplax(s.source(), s.target(), s.carrier(), &rho).map_err(|e| e.to_string())?;
        ensure!(back == s, "case {case}: lift then extract is not the identity");
        let relift = lift_comodule(&back, &cofree(s.source(), 1)).map_err(|e| e.to_string())?;
        ensure!(relift.coaction() == &rho, "case {case}: extract then lift changes the coaction");
    }
    Ok(format!("100 structures, largest (C, W, D) dims {largest:?}"))
}

fn c2_two_cells() -> Outcome {
    let mut rng = rng_for(2);
    let mut lifting = 0;
    for case in 0..50 {
        let n = random::nat_trans(&mut rng, 3, 3);
        let samples = random::comodule_samples(&mut rng, n.source.source(), 10, 3);
        ensure!(samples.len() == 10, "case {case}: expected 10 samples");
        let check = nt_lifts(&n, &samples).map_err(|e| e.to_string())?;
        ensure!(check.agrees(), "case {case}: equation {} but samples {:?}", check.lifts, check.sampled);
        lifting += usize::from(check.lifts);
    }
    Ok(format!("50 cells, {lifting} satisfy the equation"))
}

fn c3_kelly() -> Outcome {
    let mut rng = rng_for(3);
    for case in 0..100 {
        let s = random::oplax(&mut rng, 3, 3);
        let g = invertible(&mut rng, s.carrier());
        let adj = AdjunctionData::with_pairing(&g).map_err(|e| e.to_string())?;
        let lax = kelly_oplax_to_lax(&adj, &s).map_err(|e| e.to_string())?;
        ensure!(lax.bhat() == &oracle_kelly(&g, &s), "case {case}: lax structure differs from the entrywise formula");
        ensure!(lax.validate().is_ok(), "case {case}: lax axioms fail");
        let back = kelly_lax_to_oplax(&adj, &lax).map_err(|e| e.to_string())?;
        ensure!(back == s, "case {case}: oplax → lax → oplax is not the identity");
        let again = kelly_oplax_to_lax(&adj, &back).map_err(|e| e.to_string())?;
        ensure!(again == lax, "case {case}: lax → oplax → lax is not the identity");
    }
    Ok("100 cases".into())
}

fn c4_adjoint_lifting() -> Outcome {
    let mut rng = rng_for(4);
    let (mut checked, mut widest) = (0, 0);
    for (label, table) in [("kz2", groups::cyclic(2)), ("klein", groups::klein())] {
        let h = FinBialgebra::group(&table);
        for case in 0..25 {
            let v = random::group_comodule(&mut rng, &h, 4);
            let z = random::group_comodule(&mut rng, &h, 4);
            let r = mapping_comodule_data(&h, &z, &v).map_err(|e| e.to_string())?;
            let mut samples = vec![cofree(h.coalgebra(), 1), unit_comodule(&h)];
            samples.push(random::group_comodule(&mut rng, &h, 2));
            let rep = certify_lifted_adjunction(&r, &samples).map_err(|e| e.to_string())?;
            ensure!(rep.is_ok(), "{label} case {case}:\n{rep}");
            let (gv, gz) = (graded_dims(&v), graded_dims(&z));
            let (Some(gv), Some(gz)) = (gv, gz) else {
                return Err(format!("{label} case {case}: comodule over a group algebra is not graded"));
            };
            let got = graded_dims(&r.comodule);
            widest = widest.max(r.comodule.dim());
            ensure!(
                got.as_deref() == Some(&graded_hom_oracle(&table, &gz, &gv)[..]),
                "{label} case {case}: graded dims {got:?} differ from the oracle"
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs over kz2 and klein, mapping comodules up to dim {widest}"))
}

fn c5_convolution() -> Outcome {
    let h = kz2();
    let conv = convolution_algebra(h.coalgebra(), &FinAlgebra::ground());
    ensure!(conv.result.dim() == 2, "convolution algebra has dim {}", conv.result.dim());
    let (p, q) = sign_idempotents(&conv);
    // (ε ± χ)/2 evaluated on the group elements e0, e1
    let (want_p, want_q) = (LinMap::from_ints(&[&[1], &[0]]), LinMap::from_ints(&[&[0], &[1]]));
    ensure!(p == want_p && q == want_q, "idempotents {p:?} {q:?}");
    let m = conv.result.mult();
    ensure!(m * p.kron(&p) == p && m * q.kron(&q) == q, "not idempotent");
    ensure!((m * p.kron(&q)).is_zero() && (m * q.kron(&p)).is_zero(), "not orthogonal");
    ensure!(&(&p + &q) == conv.result.unit(), "do not sum to the unit");
    let iso = p.hstack(&q).unwrap();
    let transported = conv.result.transport(&iso).map_err(|e| e.to_string())?;
    ensure!(transported == FinAlgebra::product(2), "not isomorphic to ground × ground along the idempotents");

    let mut rng = rng_for(5);
    for case in 0..50 {
        let c = random::coalgebra(&mut rng, 3);
        let a = random::algebra(&mut rng, 3);
        let conv = convolution_algebra(&c, &a);
        let (dc, da) = (c.dim(), a.dim());
        let (f, g, k) = (matrix(&mut rng, da, dc), matrix(&mut rng, da, dc), matrix(&mut rng, da, dc));
        let assoc = conv.convolve(&conv.convolve(&f, &g), &k) == conv.convolve(&f, &conv.convolve(&g, &k));
        let unit = a.unit() * c.counit();
        let unital = conv.convolve(&unit, &f) == f && conv.convolve(&f, &unit) == f;
        let flat = ConvolutionAlgebra::element(&conv.convolve(&f, &g))
            == m_of(&conv) * ConvolutionAlgebra::element(&f).kron(&ConvolutionAlgebra::element(&g));
        ensure!(assoc && unital && flat, "case {case}: assoc {assoc}, unit {unital}, flat {flat}");
        ensure!(conv.result.validate().is_ok(), "case {case}: algebra axioms fail");
    }
    Ok("idempotents (1,0), (0,1); 50 random pairs".into())
}

fn m_of(conv: &ConvolutionAlgebra) -> &LinMap {
    conv.result.mult()
}

fn c6_hopf_lift() -> Outcome {
    let h = kz2();
    ensure!(h.validate().is_ok(), "kz2 is not a bialgebra");
    ensure!(lifted_tensor_report(h.coalgebra(), h.algebra()).unwrap().is_ok(), "lifted tensor fails on kz2");
    // every single-entry mutation of the four structure maps
    let (mut negatives, mut agree) = (0, 0);
    let bump = |m: &LinMap, i: usize, j: usize| {
        let mut m = m.clone();
        let v = m.get(i, j) + &Scalar::one();
        m.set(i, j, v);
        m
    };
    let mut candidates = Vec::new();
    let (c, a) = (h.coalgebra(), h.algebra());
    for i in 0..a.mult().rows() {
        for j in 0..a.mult().cols() {
            let alg = FinAlgebra::new(2, bump(a.mult(), i, j), a.unit().clone()).unwrap();
            candidates.push((c.clone(), alg));
        }
    }
    for i in 0..2 {
        let alg = FinAlgebra::new(2, a.mult().clone(), bump(a.unit(), i, 0)).unwrap();
        candidates.push((c.clone(), alg));
    }
    for i in 0..c.comult().rows() {
        for j in 0..c.comult().cols() {
            let co = wb_core::structures::FinCoalgebra::new(2, bump(c.comult(), i, j), c.counit().clone()).unwrap();
            candidates.push((co, a.clone()));
        }
    }
    for j in 0..2 {
        let co = wb_core::structures::FinCoalgebra::new(2, c.comult().clone(), bump(c.counit(), 0, j)).unwrap();
        candidates.push((co, a.clone()));
    }
    for (k, (co, alg)) in candidates.iter().enumerate() {
        let axioms = FinBialgebra::new(co.clone(), alg.clone()).unwrap().validate().is_ok();
        let lifted = lifted_tensor_report(co, alg).map_err(|e| e.to_string())?.is_ok();
        ensure!(axioms == lifted, "mutation {k}: axioms {axioms}, lifted tensor {lifted}");
        negatives += usize::from(!axioms);
        agree += 1;
    }
    ensure!(negatives > 0, "no mutation broke the axioms");

    // strict monoidality of the forgetful functor
    let mut rng = rng_for(6);
    let k = unit_comodule(&h);
    for case in 0..20 {
        let vs: Vec<Comodule> = (0..3).map(|_| random::comodule(&mut rng, h.coalgebra(), 3)).collect();
        let t = |x: &Comodule, y: &Comodule| comodule_tensor(&h, x, y).unwrap();
        let left = t(&t(&vs[0], &vs[1]), &vs[2]);
        let right = t(&vs[0], &t(&vs[1], &vs[2]));
        ensure!(left == right, "case {case}: tensor not strictly associative");
        ensure!(left.dim() == vs[0].dim() * vs[1].dim() * vs[2].dim(), "case {case}: underlying space is not the tensor");
        ensure!(t(&k, &vs[0]) == vs[0] && t(&vs[0], &k) == vs[0], "case {case}: unit not strict");
        ensure!(left.validate().is_ok(), "case {case}: tensor is not a comodule");
    }
    Ok(format!("{agree} structures ({negatives} mutated negatives) agree; strict on 20 triples"))
}

fn c7_lqr() -> Outcome {
    let mut rng = rng_for(7);
    for case in 0..50 {
        let s = random::oplax(&mut rng, 2, 2);
        let adj = random::adjunction(&mut rng, s.carrier());
        let f = factor_comonad(&adj, &s).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(f.comonad.validate().is_ok(), "case {case}: comonad axioms fail");
        ensure!(f.comonad.dim() == s.carrier() * s.source().dim() * s.carrier(), "case {case}: comonad dim");
        ensure!(f.first.validate().is_ok() && f.second.validate().is_ok(), "case {case}: factors not oplax");
        let composite = f.first.then(&f.second).map_err(|e| e.to_string())?;
        ensure!(composite == s, "case {case}: composite differs from the input");
    }
    Ok("50 cases".into())
}

fn c8_tce() -> Outcome {
    let mut rng = rng_for(8);
    let h = kz2();
    let mut homs = 0;
    for case in 0..25 {
        let mut c = || random::group_comodule(&mut rng, &h, 3);
        let triple = (c(), c(), c());
        let vw = comodule_tensor(&h, &triple.0, &triple.1).unwrap();
        homs += comodule_hom_space(&vw, &triple.2).unwrap().len();
        let rep = verify_tce(&h, &[triple], case).map_err(|e| e.to_string())?;
        ensure!(rep.is_ok(), "case {case}:\n{rep}");
    }
    Ok(format!("25 triples, {homs} hom basis elements carried both ways"))
}

fn c9_transfer() -> Outcome {
    let mut rng = rng_for(9);
    let degrees = [-1, 0, 1];
    let mut largest = 0;
    for case in 0..50 {
        let h = if case % 2 == 0 { kz2() } else { klein() };
        let z = random::dg_comodule(&mut rng, &h, &degrees, 4);
        let v = random::dg_comodule(&mut rng, &h, &degrees, 4);
        let total = z.complex().total_dim() + v.complex().total_dim();
        ensure!(total <= 8, "case {case}: total dim {total}");
        largest = largest.max(total);
        let pairing = if case % 4 < 2 { Pairing::Mapping } else { Pairing::Enriched };
        let check = transfer_iso_check(&h, &z, &v, pairing).map_err(|e| e.to_string())?;
        ensure!(check.hypotheses.is_ok(), "case {case}: hypotheses\n{}", check.hypotheses);
        ensure!(check.conclusion.is_ok(), "case {case}: comparison\n{}", check.conclusion);
    }
    Ok(format!("50 cases, total dims up to {largest}"))
}

fn c10_universal() -> Outcome {
    let mut rng = rng_for(10);
    for case in 0..200 {
        let c = random::coalgebra(&mut rng, 3);
        let r = match case % 4 {
            0 => {
                let v = random::comodule(&mut rng, &c, 4);
                let w = random::comodule(&mut rng, &c, 3);
                let (f, g) = (morphism(&mut rng, &v, &w), morphism(&mut rng, &v, &w));
                let (e, incl) = wb_core::comodcat::comodule_equalizer(&f, &g).map_err(|e| e.to_string())?;
                let t = random::comodule(&mut rng, &c, 3);
                let cone = &incl.map * &morphism(&mut rng, &t, &e).map;
                check_equalizer_universal(&f, &g, &t, &cone)
            }
            1 => {
                let vs: Vec<Comodule> = (0..1 + case % 3).map(|_| random::comodule(&mut rng, &c, 3)).collect();
                let t = random::comodule(&mut rng, &c, 3);
                let legs: Vec<LinMap> = vs.iter().map(|v| morphism(&mut rng, &t, v).map).collect();
                check_product_universal(&c, &vs, &t, &legs)
            }
            2 => {
                let a = random::algebra(&mut rng, 3);
                let (m, n) = (random::module(&mut rng, &a, 4), random::module(&mut rng, &a, 4));
                let hom = module_hom_space(&m, &n).unwrap();
                let mut pick = || combination(&mut rng, &hom, n.dim(), m.dim());
                let f = ModuleMorphism::new(m.clone(), n.clone(), pick()).unwrap();
                let g = ModuleMorphism::new(m.clone(), n.clone(), pick()).unwrap();
                let (q, proj) = module_coequalizer(&f, &g).map_err(|e| e.to_string())?;
                ensure!(proj.map == coequalizer(&f.map, &g.map).unwrap(), "case {case}: underlying coequalizer");
                let t = random::module(&mut rng, &a, 3);
                let out = module_hom_space(&q, &t).unwrap();
                let cocone = combination(&mut rng, &out, t.dim(), q.dim()) * &proj.map;
                check_coequalizer_universal(&f, &g, &t, &cocone)
            }
            _ => {
                // comodule coequalizers: the quotient and its factorization, checked directly
                let v = random::comodule(&mut rng, &c, 3);
                let w = random::comodule(&mut rng, &c, 4);
                let (f, g) = (morphism(&mut rng, &v, &w), morphism(&mut rng, &v, &w));
                let (q, proj) = comodule_coequalizer(&f, &g).map_err(|e| e.to_string())?;
                ensure!(proj.map == coequalizer(&f.map, &g.map).unwrap(), "case {case}: underlying coequalizer");
                ensure!(proj.check().is_ok() && q.validate().is_ok(), "case {case}: quotient is not a comodule");
                let t = random::comodule(&mut rng, &c, 3);
                let cocone = &morphism(&mut rng, &q, &t).map * &proj.map;
                ensure!(&cocone * &f.map == &cocone * &g.map, "case {case}: not a cocone");
                let u = solve_right_factor(&proj.map, &cocone).unwrap();
                let Some(u) = u else { return Err(format!("case {case}: cocone does not factor")) };
                ensure!(is_comodule_morphism(&q, &t, &u), "case {case}: factor is not a morphism");
                ensure!(proj.map.is_surjective(), "case {case}: factor is not unique");
                Ok(wb_core::Report::new())
            }
        };
        let r = r.map_err(|e| format!("case {case}: {e}"))?;
        ensure!(r.is_ok(), "case {case}:\n{r}");
    }
    Ok("200 cones and cocones".into())
}

// ---------------------------------------------------------------------------
// CLI

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn wb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wb"))
        .args(args)
        .env("WB_SEED", "0")
        .output()
        .expect("run wb");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn c11_cli() -> Outcome {
    let expected = [("ground.wb", 0), ("kz2.wb", 0), ("kz2xz2.wb", 0), ("broken-counit.wb", 1)];
    for (name, code) in expected {
        let path = fixture(name);
        let p = path.to_str().unwrap();
        for cmd in ["validate", "report"] {
            let first = wb(&[cmd, p]);
            ensure!(first.0 == code, "{cmd} {name}: exit {} (want {code})\n{}{}", first.0, first.1, first.2);
            let second = wb(&[cmd, p]);
            ensure!(first == second, "{cmd} {name}: output differs between runs");
        }
    }
    let broken = wb(&["validate", fixture("broken-counit.wb").to_str().unwrap()]);
    ensure!(broken.1.contains("counit"), "broken-counit report does not name the axiom:\n{}", broken.1);
    let missing = wb(&["validate", fixture("no-such-file.wb").to_str().unwrap()]);
    ensure!(missing.0 == 2, "missing file: exit {}", missing.0);

    let kz2_path = fixture("kz2.wb");
    let kz2_file = kz2_path.to_str().unwrap();
    let compute = |args: &[&str]| -> Result<format::WorkbenchFile, String> {
        let mut all = vec!["compute", kz2_file];
        all.extend_from_slice(args);
        let (code, out, err) = wb(&all);
        ensure!(code == 0, "compute {args:?}: exit {code}\n{out}{err}");
        ensure!(wb(&all).1 == out, "compute {args:?}: output differs between runs");
        let parsed = format::parse(&out).map_err(|e| format!("compute {args:?} output does not parse: {e}"))?;
        ensure!(parsed.to_string() + &comments(&out) == out, "compute {args:?}: output does not round-trip");
        Ok(parsed)
    };

    let conv = compute(&["conv", "kz2", "ground"])?;
    let Some(Value::Algebra(a)) = conv.get("conv") else { return Err("conv printed no algebra".into()) };
    let direct = convolution_algebra(kz2().coalgebra(), &FinAlgebra::ground()).result;
    ensure!(a == &direct && a.dim() == 2, "conv kz2 ground differs from the library result");

    let input = format::parse(&std::fs::read_to_string(&kz2_path).unwrap()).map_err(|e| e.to_string())?;
    let tensored = compute(&["tensor", "unit", "graded"])?;
    let (Some(Value::Comodule { comodule: t, .. }), Some(Value::Comodule { comodule: v, .. })) =
        (tensored.get("tensor"), input.get("graded"))
    else {
        return Err("tensor printed no comodule".into());
    };
    ensure!(t.coaction() == v.coaction(), "tensor unit V is not V");

    let (code, out, _) = wb(&["compute", kz2_file, "kelly", "roundtrip", "shear", "reg"]);
    ensure!(code == 0 && out.contains("identity: yes"), "kelly roundtrip: exit {code}\n{out}");

    for args in [
        &["hom", "graded", "odd"][..],
        &["enriched", "graded", "odd"],
        &["lift", "reg", "odd"],
        &["adjoint", "shear", "reg", "odd"],
        &["factor", "shear", "reg", "--as", "lqr"],
        &["transfer", "oddinterval", "oddinterval"],
    ] {
        compute(args)?;
    }
    let (code, _, _) = wb(&["compute", kz2_file, "frobnicate"]);
    ensure!(code == 2, "unknown verb: exit {code}");
    Ok("4 fixtures, exit codes, determinism, compute verbs".into())
}

/// The trailing `#` lines of a compute output, after their blank separator.
fn comments(out: &str) -> String {
    let body: Vec<&str> = out.lines().collect();
    let start = body.iter().rposition(|l| !l.starts_with('#')).map_or(0, |i| i + 1);
    let tail: String = body[start..].iter().map(|l| format!("{l}\n")).collect();
    if tail.is_empty() {
        tail
    } else {
        format!("\n{tail}")
    }
}

// ---------------------------------------------------------------------------

fn main() {
    let criteria: [Criterion; 11] = [
        ("lifting bijection", c1_lifting_bijection),
        ("2-cell criterion", c2_two_cells),
        ("Kelly round trips", c3_kelly),
        ("adjoint lifting", c4_adjoint_lifting),
        ("convolution", c5_convolution),
        ("Hopf comonad and lifted tensor", c6_hopf_lift),
        ("LQR factorization", c7_lqr),
        ("TCE isomorphisms", c8_tce),
        ("graded transfer", c9_transfer),
        ("universal properties", c10_universal),
        ("CLI", c11_cli),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                println!("criterion {:2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
