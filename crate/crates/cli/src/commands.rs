//! `validate`, `compute` and `report` on a parsed file.

use std::fmt::Write as _;

use thiserror::Error;
use wb_core::adjlift::{
    certify_lifted_adjunction, enriched_hom_data, factor_comonad, kelly_lax_to_oplax, kelly_oplax_to_lax,
    lifted_right_adjoint, mapping_comodule_data, verify_tce, AdjunctionData, LaxStructure, LiftedRightAdjoint,
};
use wb_core::comodcat::{cofree, cofree_adjunct, cofree_unadjunct, is_comodule_morphism, Comodule};
use wb_core::dgchain::{
    hom_complex, koszul_symmetry, tensor_complex, transfer_iso_check, ChainComplex, DgComodule, Pairing,
};
use wb_core::exactlin::{id, LinMap};
use wb_core::hopf::{
    check_symmetric_hopf, comodule_tensor, convolution_algebra, hopf_squares, lifted_tensor_report, readback_lax,
    sign_idempotents, unit_comodule,
};
use wb_core::oplaxfun::{
    extract_oplax, is_comonad_functor, lift_comodule, lifted_cofree_coaction, nt_lifts, NatTransData, OplaxStructure,
};
use wb_core::random;
use wb_core::structures::{dual_algebra, dual_coalgebra, FinAlgebra, FinBialgebra, FinCoalgebra};
use wb_core::{Error, Report};

use crate::format::{print_decl, Declaration, Kind, Value, WorkbenchFile, HEADER};

/// Exit status of a command: `Math` is exit 1, `Usage` exit 2.
#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Math(String),
    #[error("{0}")]
    Usage(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Math(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(_) | Error::Unsolvable(_) => Failure::Math(e.to_string()),
            Error::Shape { .. } | Error::Mismatch(_) => Failure::Usage(e.to_string()),
        }
    }
}

/// Text to print and whether every check passed.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

pub const GROUND: &str = "ground";
pub const UNIT: &str = "unit";

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn require(kind: &str, name: &str, r: Report) -> Result<(), Failure> {
    if r.is_ok() {
        Ok(())
    } else {
        Err(Failure::Math(format!("{kind} `{name}` is invalid\n{r}")))
    }
}

// ---------------------------------------------------------------------------
// resolution of operands

fn bialgebra(f: &WorkbenchFile, name: &str) -> Result<FinBialgebra, Failure> {
    match f.get(name) {
        Some(Value::Bialgebra(h)) => Ok(h.clone()),
        None if name == GROUND => Ok(FinBialgebra::ground()),
        Some(v) => Err(usage(format!("`{name}` is a {}, not a bialgebra", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

fn coalgebra(f: &WorkbenchFile, name: &str) -> Result<FinCoalgebra, Failure> {
    match f.get(name) {
        None if name == GROUND => Ok(FinCoalgebra::ground()),
        Some(Value::Coalgebra(_) | Value::Bialgebra(_)) => Ok(f.coalgebra(name).unwrap()),
        Some(v) => Err(usage(format!("`{name}` is a {}, not a coalgebra", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

fn algebra(f: &WorkbenchFile, name: &str) -> Result<FinAlgebra, Failure> {
    match f.get(name) {
        Some(Value::Algebra(a)) => Ok(a.clone()),
        Some(Value::Bialgebra(h)) => Ok(h.algebra().clone()),
        None if name == GROUND => Ok(FinAlgebra::ground()),
        Some(v) => Err(usage(format!("`{name}` is a {}, not an algebra", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

fn comodule(f: &WorkbenchFile, name: &str) -> Result<(String, Comodule), Failure> {
    match f.get(name) {
        Some(Value::Comodule { over, comodule }) => Ok((over.clone(), comodule.clone())),
        Some(v) => Err(usage(format!("`{name}` is a {}, not a comodule", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

/// Two comodule operands over one bialgebra; `unit` takes the other's bialgebra.
fn comodule_pair(f: &WorkbenchFile, a: &str, b: &str) -> Result<(String, FinBialgebra, Comodule, Comodule), Failure> {
    let over = match (a, b) {
        (UNIT, UNIT) => return Err(usage("at least one operand must be a declared comodule")),
        (UNIT, other) | (other, UNIT) => comodule(f, other)?.0,
        _ => {
            let (x, y) = (comodule(f, a)?.0, comodule(f, b)?.0);
            if x != y {
                return Err(usage(format!("`{a}` is over `{x}` but `{b}` is over `{y}`")));
            }
            x
        }
    };
    let h = bialgebra(f, &over)?;
    require("bialgebra", &over, h.validate())?;
    let get = |n: &str| -> Result<Comodule, Failure> {
        if n == UNIT {
            return Ok(unit_comodule(&h));
        }
        let c = comodule(f, n)?.1;
        require("comodule", n, c.validate())?;
        Ok(c)
    };
    Ok((over.clone(), h.clone(), get(a)?, get(b)?))
}

fn oplax(f: &WorkbenchFile, name: &str) -> Result<(String, String, OplaxStructure), Failure> {
    match f.get(name) {
        Some(Value::Oplax { source, target, structure }) => {
            require("oplax", name, structure.validate())?;
            Ok((source.clone(), target.clone(), structure.clone()))
        }
        Some(v) => Err(usage(format!("`{name}` is a {}, not an oplax structure", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

fn lax(f: &WorkbenchFile, name: &str) -> Result<(String, String, LaxStructure), Failure> {
    match f.get(name) {
        Some(Value::Lax { source, target, structure }) => {
            require("lax", name, structure.validate())?;
            Ok((source.clone(), target.clone(), structure.clone()))
        }
        Some(v) => Err(usage(format!("`{name}` is a {}, not a lax structure", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

fn adjunction_of(pairing: &LinMap) -> Result<AdjunctionData, Report> {
    AdjunctionData::with_pairing(pairing).map_err(|e| match e {
        Error::Invalid(r) => r,
        _ => {
            let mut r = Report::new();
            r.fail("pairing-degenerate", pairing.clone());
            r
        }
    })
}

fn adjunction(f: &WorkbenchFile, name: &str) -> Result<AdjunctionData, Failure> {
    match f.get(name) {
        Some(Value::Adjunction { pairing }) => {
            adjunction_of(pairing).map_err(|r| Failure::Math(format!("adjunction `{name}` is invalid\n{r}")))
        }
        Some(v) => Err(usage(format!("`{name}` is a {}, not an adjunction", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

fn complex_of(degrees: &[i64], d: &LinMap) -> Result<ChainComplex, Report> {
    ChainComplex::from_total(degrees, d).map_err(|_| {
        let mut r = Report::new();
        r.fail("differential-degree", d.clone());
        r
    })
}

fn dg_of(h: &FinBialgebra, degrees: &[i64], d: &LinMap, coaction: &LinMap) -> Result<DgComodule, Report> {
    let x = complex_of(degrees, d)?;
    DgComodule::from_total(h, x, coaction).map_err(|_| {
        let mut r = Report::new();
        r.fail("coaction-degree", coaction.clone());
        r
    })
}

fn dg(f: &WorkbenchFile, name: &str) -> Result<(String, DgComodule), Failure> {
    match f.get(name) {
        Some(Value::DgComodule { over, degrees, differential, coaction }) => {
            let h = bialgebra(f, over)?;
            require("bialgebra", over, h.validate())?;
            let v = dg_of(&h, degrees, differential, coaction)
                .map_err(|r| Failure::Math(format!("dgcomodule `{name}` is invalid\n{r}")))?;
            require("dgcomodule", name, v.validate())?;
            Ok((over.clone(), v))
        }
        Some(v) => Err(usage(format!("`{name}` is a {}, not a dg comodule", v.kind().keyword()))),
        None => Err(usage(format!("`{name}` is not declared"))),
    }
}

// ---------------------------------------------------------------------------
// validate

fn validate_value(f: &WorkbenchFile, v: &Value) -> Report {
    match v {
        Value::Coalgebra(c) => c.validate(),
        Value::Algebra(a) => a.validate(),
        Value::Bialgebra(h) => h.validate(),
        Value::Comodule { comodule, .. } => comodule.validate(),
        Value::Oplax { structure, .. } => structure.validate(),
        Value::Lax { structure, .. } => structure.validate(),
        Value::Adjunction { pairing } => adjunction_of(pairing).map_or_else(|r| r, |a| a.validate()),
        Value::Complex { degrees, differential } => {
            complex_of(degrees, differential).map_or_else(|r| r, |x| x.validate())
        }
        Value::DgComodule { over, degrees, differential, coaction } => {
            let h = bialgebra(f, over).expect("checked by the parser");
            dg_of(&h, degrees, differential, coaction).map_or_else(|r| r, |x| x.validate())
        }
    }
}

pub fn validate(f: &WorkbenchFile) -> Output {
    let mut text = String::new();
    let mut ok = true;
    for d in &f.decls {
        let r = validate_value(f, &d.value);
        let kw = d.value.kind().keyword();
        if r.is_ok() {
            let _ = writeln!(text, "{kw} {}: ok", d.name);
        } else {
            ok = false;
            let _ = writeln!(text, "{kw} {}: FAIL", d.name);
            for line in r.to_string().lines() {
                let _ = writeln!(text, "  {line}");
            }
        }
    }
    let _ = writeln!(text, "{} declarations, {}", f.decls.len(), if ok { "all valid" } else { "some invalid" });
    Output { text, ok }
}

// ---------------------------------------------------------------------------
// compute

/// New declarations plus the input declarations they depend on, then `#` lines.
fn emit(f: &WorkbenchFile, new: &[Declaration], notes: &[String]) -> String {
    let mut needed: Vec<String> = Vec::new();
    let mut stack: Vec<String> = new
        .iter()
        .flat_map(|d| d.value.references().into_iter().map(String::from))
        .collect();
    while let Some(n) = stack.pop() {
        if needed.contains(&n) || new.iter().any(|d| d.name == n) {
            continue;
        }
        if let Some(v) = f.get(&n) {
            stack.extend(v.references().into_iter().map(String::from));
        }
        needed.push(n);
    }
    let mut out = format!("{HEADER}\n");
    if needed.iter().any(|n| n == GROUND) && f.get(GROUND).is_none() {
        out.push('\n');
        out.push_str(&print_decl(&Declaration {
            name: GROUND.into(),
            value: Value::Bialgebra(FinBialgebra::ground()),
        }));
    }
    for d in f.decls.iter().filter(|d| needed.contains(&d.name)) {
        out.push('\n');
        out.push_str(&print_decl(d));
    }
    for d in new {
        out.push('\n');
        out.push_str(&print_decl(d));
    }
    if !notes.is_empty() {
        out.push('\n');
    }
    for n in notes {
        let _ = writeln!(out, "# {n}");
    }
    out
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn arity(verb: &str, args: &[String], n: usize, shape: &str) -> Result<(), Failure> {
    if args.len() != n {
        return Err(usage(format!("usage: compute <file> {verb} {shape}")));
    }
    Ok(())
}

/// Samples for certifying adjunctions: `cofree(𝕂)` and every declared comodule over `over`.
fn samples(f: &WorkbenchFile, c: &FinCoalgebra) -> Vec<Comodule> {
    let mut out = vec![cofree(c, 1)];
    for d in &f.decls {
        if let Value::Comodule { comodule, .. } = &d.value {
            if comodule.over() == c && comodule.validate().is_ok() && !out.contains(comodule) {
                out.push(comodule.clone());
            }
        }
    }
    out
}

fn certify(r: &LiftedRightAdjoint, samples: &[Comodule], notes: &mut Vec<String>) -> Result<bool, Failure> {
    let rep = certify_lifted_adjunction(r, samples)?;
    notes.push(format!(
        "adjunction certified on {} samples (hom dims, both round trips, naturality): {}",
        samples.len(),
        status(rep.is_ok())
    ));
    for line in rep.to_string().lines().filter(|_| !rep.is_ok()) {
        notes.push(format!("  {line}"));
    }
    Ok(rep.is_ok())
}

pub fn compute(f: &WorkbenchFile, verb: &str, args: &[String], out_name: Option<&str>) -> Result<Output, Failure> {
    let name = out_name.unwrap_or(verb).to_string();
    if !crate::format::is_name(&name) {
        return Err(usage(format!("invalid output name `{name}`")));
    }
    let mut notes = Vec::new();
    let mut ok = true;
    let decls: Vec<Declaration> = match verb {
        "tensor" => {
            arity(verb, args, 2, "<comodule|unit> <comodule|unit>")?;
            let (over, h, a, b) = comodule_pair(f, &args[0], &args[1])?;
            let t = comodule_tensor(&h, &a, &b)?;
            let valid = t.validate().is_ok();
            ok &= valid;
            notes.push(format!("comodule axioms of {} ⊗ {}: {}", args[0], args[1], status(valid)));
            vec![Declaration { name, value: Value::Comodule { over, comodule: t } }]
        }
        "hom" | "enriched" => {
            // hom takes Z V; enriched takes W Z
            arity(verb, args, 2, if verb == "hom" { "<Z> <V>" } else { "<W> <Z>" })?;
            let (zname, vname) = if verb == "hom" { (&args[0], &args[1]) } else { (&args[1], &args[0]) };
            let (over, h, z, v) = comodule_pair(f, zname, vname)?;
            let data = if verb == "hom" {
                mapping_comodule_data(&h, &z, &v)?
            } else {
                enriched_hom_data(&h, &v, &z)?
            };
            ok &= certify(&data, &samples(f, h.coalgebra()), &mut notes)?;
            let comodule = data.comodule;
            vec![Declaration { name, value: Value::Comodule { over, comodule } }]
        }
        "conv" => {
            arity(verb, args, 2, "<coalgebra> <algebra>")?;
            let (c, a) = (coalgebra(f, &args[0])?, algebra(f, &args[1])?);
            require("coalgebra", &args[0], c.validate())?;
            require("algebra", &args[1], a.validate())?;
            let conv = convolution_algebra(&c, &a);
            let valid = conv.result.validate().is_ok();
            ok &= valid;
            notes.push(format!("algebra axioms: {}", status(valid)));
            if c.dim() == 2 && a.dim() == 1 && c == FinCoalgebra::grouplike(2) {
                let (p, q) = sign_idempotents(&conv);
                let m = conv.result.mult();
                let idem = |e: &LinMap| &(m * e.kron(e)) == e;
                let split = idem(&p)
                    && idem(&q)
                    && (m * p.kron(&q)).is_zero()
                    && &(&p + &q) == conv.result.unit();
                ok &= split;
                let show = |e: &LinMap| (0..e.rows()).map(|i| e.get(i, 0).to_string()).collect::<Vec<_>>().join(" ");
                notes.push(format!("idempotents: [{}] [{}]", show(&p), show(&q)));
                notes.push(format!("orthogonal idempotents summing to the unit: {}", status(split)));
            }
            vec![Declaration { name, value: Value::Algebra(conv.result) }]
        }
        "kelly" => {
            let sub = args.first().map(String::as_str).unwrap_or("");
            arity(verb, args, 3, "<roundtrip|lax|oplax> <adjunction> <structure>")?;
            let adj = adjunction(f, &args[1])?;
            match sub {
                "roundtrip" | "lax" => {
                    let (source, target, s) = oplax(f, &args[2])?;
                    let l = kelly_oplax_to_lax(&adj, &s)?;
                    let valid = l.validate().is_ok();
                    ok &= valid;
                    notes.push(format!("lax axioms: {}", status(valid)));
                    if sub == "roundtrip" {
                        let back = kelly_lax_to_oplax(&adj, &l)?;
                        let same = back == s;
                        ok &= same;
                        notes.push(format!("identity: {}", if same { "yes" } else { "no" }));
                    }
                    vec![Declaration { name, value: Value::Lax { source, target, structure: l } }]
                }
                "oplax" => {
                    let (source, target, l) = lax(f, &args[2])?;
                    let s = kelly_lax_to_oplax(&adj, &l)?;
                    let valid = s.validate().is_ok();
                    ok &= valid;
                    notes.push(format!("oplax axioms: {}", status(valid)));
                    vec![Declaration { name, value: Value::Oplax { source, target, structure: s } }]
                }
                _ => return Err(usage(format!("unknown kelly mode `{sub}`"))),
            }
        }
        "lift" => {
            arity(verb, args, 2, "<oplax> <comodule>")?;
            let (_, target, s) = oplax(f, &args[0])?;
            let (_, v) = comodule(f, &args[1])?;
            require("comodule", &args[1], v.validate())?;
            let l = lift_comodule(&s, &v)?;
            let valid = l.validate().is_ok();
            ok &= valid;
            notes.push(format!("comodule axioms of the lift: {}", status(valid)));
            vec![Declaration { name, value: Value::Comodule { over: target, comodule: l } }]
        }
        "adjoint" => {
            arity(verb, args, 3, "<adjunction> <oplax> <comodule>")?;
            let adj = adjunction(f, &args[0])?;
            let (source, _, s) = oplax(f, &args[1])?;
            let (_, z) = comodule(f, &args[2])?;
            require("comodule", &args[2], z.validate())?;
            let r = lifted_right_adjoint(&adj, &s, &z)?;
            ok &= certify(&r, &samples(f, s.source()), &mut notes)?;
            vec![Declaration { name, value: Value::Comodule { over: source, comodule: r.comodule } }]
        }
        "factor" => {
            arity(verb, args, 2, "<adjunction> <oplax>")?;
            let adj = adjunction(f, &args[0])?;
            let (source, target, s) = oplax(f, &args[1])?;
            let fac = factor_comonad(&adj, &s)?;
            notes.push("comonad axioms: ok".into());
            notes.push("factorization equals the input: ok".into());
            let mid = name.clone();
            vec![
                Declaration { name: mid.clone(), value: Value::Coalgebra(fac.comonad) },
                Declaration {
                    name: format!("{mid}.first"),
                    value: Value::Oplax { source, target: mid.clone(), structure: fac.first },
                },
                Declaration {
                    name: format!("{mid}.second"),
                    value: Value::Oplax { source: mid, target, structure: fac.second },
                },
            ]
        }
        "transfer" => {
            if args.len() != 2 && args.len() != 3 {
                return Err(usage("usage: compute <file> transfer <Z> <V> [mapping|enriched]"));
            }
            let pairing = match args.get(2).map(String::as_str) {
                None | Some("mapping") => Pairing::Mapping,
                Some("enriched") => Pairing::Enriched,
                Some(other) => return Err(usage(format!("unknown pairing `{other}`"))),
            };
            let (over, z) = dg(f, &args[0])?;
            let (over_v, v) = dg(f, &args[1])?;
            if over != over_v {
                return Err(usage(format!("`{}` and `{}` are over different bialgebras", args[0], args[1])));
            }
            let h = bialgebra(f, &over)?;
            let check = transfer_iso_check(&h, &z, &v, pairing)?;
            notes.push(format!("hypotheses: {}", status(check.hypotheses.is_ok())));
            for line in check.hypotheses.to_string().lines().filter(|_| !check.hypotheses.is_ok()) {
                notes.push(format!("  {line}"));
            }
            notes.push(format!("comparison is an isomorphism of graded comodules: {}", status(check.conclusion.is_ok())));
            for line in check.conclusion.to_string().lines().filter(|_| !check.conclusion.is_ok()) {
                notes.push(format!("  {line}"));
            }
            let dims: Vec<String> = check.graded_dims.iter().map(|(n, d)| format!("{n}:{d}")).collect();
            notes.push(format!("graded dims: {}", dims.join(" ")));
            ok &= check.is_ok();
            let m = &check.mapping;
            vec![Declaration {
                name,
                value: Value::DgComodule {
                    over,
                    degrees: m.complex().degrees(),
                    differential: m.complex().total_differential(),
                    coaction: m.total_comodule().coaction().clone(),
                },
            }]
        }
        _ => return Err(usage(format!("unknown verb `{verb}`"))),
    };
    if let Some(clash) = decls.iter().find(|d| f.get(&d.name).is_some()) {
        return Err(usage(format!("output name `{}` is already declared; pick another with --as", clash.name)));
    }
    Ok(Output { text: emit(f, &decls, &notes), ok })
}

// ---------------------------------------------------------------------------
// report

struct Checks {
    text: String,
    total: usize,
    failed: usize,
}

impl Checks {
    fn section(&mut self, kind: Kind, name: &str) {
        let _ = writeln!(self.text, "[{} {name}]", kind.keyword());
    }

    fn check(&mut self, what: &str, ok: bool) {
        self.total += 1;
        if !ok {
            self.failed += 1;
        }
        let _ = writeln!(self.text, "  {what}: {}", status(ok));
    }

    fn report(&mut self, what: &str, r: &Report) {
        self.check(what, r.is_ok());
        for line in r.to_string().lines().filter(|_| !r.is_ok()) {
            let _ = writeln!(self.text, "    {line}");
        }
    }

    fn result(&mut self, what: &str, r: Result<bool, Error>) {
        match r {
            Ok(b) => self.check(what, b),
            Err(e) => {
                self.check(what, false);
                let _ = writeln!(self.text, "    {e}");
            }
        }
    }

    fn skip(&mut self, what: &str) {
        let _ = writeln!(self.text, "  {what}: skipped");
    }
}

fn cofree_triangles(c: &FinCoalgebra, v: &Comodule, rng: &mut random::WbRng) -> bool {
    let f = random::matrix(rng, 2, v.dim());
    let g = cofree_adjunct(v, &f);
    is_comodule_morphism(v, &cofree(c, 2), &g) && cofree_unadjunct(c, 2, &g) == f
}

fn report_coalgebra(ch: &mut Checks, c: &FinCoalgebra, rng: &mut random::WbRng) {
    ch.report("coalgebra axioms", &c.validate());
    if !c.validate().is_ok() {
        ch.skip("comonad laws");
        return;
    }
    let laws = (1..=2).all(|x| c.check_comonad_laws(x).is_ok());
    ch.check("comonad laws at dims 1, 2", laws);
    ch.check("dual algebra round trip", &dual_coalgebra(&dual_algebra(c)) == c);
    if c.dim() <= 4 {
        let ok = (0..3).all(|_| {
            let v = random::comodule(rng, c, 3);
            v.validate().is_ok() && cofree_triangles(c, &v, rng)
        });
        ch.check("cofree adjunction on 3 random comodules", ok);
    }
}

fn report_bialgebra(ch: &mut Checks, h: &FinBialgebra, rng: &mut random::WbRng) {
    let axioms = h.validate();
    ch.report("bialgebra axioms", &axioms);
    let squares = hopf_squares(h.coalgebra(), h.algebra(), 1, 1, 1).map(|r| r.is_ok());
    let lifted = lifted_tensor_report(h.coalgebra(), h.algebra()).map(|r| r.is_ok());
    ch.result(
        "hopf comonad squares agree with the axioms",
        squares.map(|s| s == axioms.is_ok()),
    );
    ch.result(
        "lifted tensor comodule axioms agree with the axioms",
        lifted.map(|l| l == axioms.is_ok()),
    );
    if !axioms.is_ok() {
        ch.skip("tensor of comodules");
        return;
    }
    ch.result(
        "lax structure read back from the tensor",
        readback_lax(h).map(|(m, u)| &m == h.algebra().mult() && &u == h.algebra().unit()),
    );
    if h.dim() <= 4 {
        let vs: Vec<Comodule> = (0..3).map(|_| random::comodule(rng, h.coalgebra(), 2)).collect();
        let strict = (|| -> Result<bool, Error> {
            let t = |a: &Comodule, b: &Comodule| comodule_tensor(h, a, b);
            let k = unit_comodule(h);
            Ok(t(&t(&vs[0], &vs[1])?, &vs[2])? == t(&vs[0], &t(&vs[1], &vs[2])?)?
                && t(&k, &vs[0])? == vs[0]
                && t(&vs[0], &k)? == vs[0])
        })();
        ch.result("tensor strictly associative and unital on samples", strict);
        ch.result("symmetry check", check_symmetric_hopf(h, &vs).map(|_| true));
    }
    let conv = convolution_algebra(h.coalgebra(), &FinAlgebra::ground());
    ch.report("convolution algebra [H, ground]", &conv.result.validate());
}

fn report_comodule(ch: &mut Checks, f: &WorkbenchFile, over: &str, v: &Comodule, rng: &mut random::WbRng) {
    ch.report("comodule axioms", &v.validate());
    if !v.validate().is_ok() || !v.over().validate().is_ok() {
        ch.skip("cofree adjunction");
        return;
    }
    ch.check("coaction is the adjunct of the identity", &cofree_adjunct(v, &id(v.dim())) == v.coaction());
    ch.check("cofree adjunction", cofree_triangles(v.over(), v, rng));
    if let Ok(h) = bialgebra(f, over) {
        if h.validate().is_ok() && v.dim() <= 3 && h.dim() <= 4 {
            let k = unit_comodule(&h);
            let unital = comodule_tensor(&h, &k, v).map(|t| &t == v);
            ch.result("unit ⊗ V = V", unital);
            let tce = verify_tce(&h, &[(v.clone(), v.clone(), v.clone())], 0).map(|r| r.is_ok());
            ch.result("tensor-hom bijections on (V, V, V)", tce);
        }
    }
}

fn report_oplax(ch: &mut Checks, f: &WorkbenchFile, s: &OplaxStructure) {
    let axioms = s.validate();
    ch.report("oplax axioms", &axioms);
    let cofree_lift = lift_comodule(s, &cofree(s.source(), 1)).map(|l| l.validate().is_ok());
    ch.result("cofree lift is a comodule exactly when oplax", cofree_lift.map(|l| l == axioms.is_ok()));
    if !axioms.is_ok() {
        ch.skip("lifting bijection");
        return;
    }
    let back = extract_oplax(s.source(), s.target(), s.carrier(), &lifted_cofree_coaction(s));
    ch.result("lift then extract is the identity", back.map(|b| &b == s));
    ch.check("comonad functor witness consistent", is_comonad_functor(s, &[0, 1, 2]).consistent());
    let idn = NatTransData::new(s.clone(), s.clone(), id(s.carrier())).and_then(|n| {
        let samples = vec![cofree(s.source(), 1)];
        nt_lifts(&n, &samples).map(|r| r.lifts && r.agrees())
    });
    ch.result("identity 2-cell lifts", idn);
    for d in &f.decls {
        let Value::Adjunction { pairing } = &d.value else { continue };
        if pairing.rows() != s.carrier() {
            continue;
        }
        let Ok(adj) = adjunction_of(pairing) else {
            ch.skip(&format!("with adjunction {}", d.name));
            continue;
        };
        let kelly = kelly_oplax_to_lax(&adj, s).and_then(|l| kelly_lax_to_oplax(&adj, &l)).map(|b| &b == s);
        ch.result(&format!("kelly round trip through {}", d.name), kelly);
        // the middle comonad has dimension w·dim(C)·w and its axioms are cubic in that
        if s.carrier() * s.carrier() * s.source().dim() <= 16 {
            ch.result(&format!("factorization through {}", d.name), factor_comonad(&adj, s).map(|_| true));
        } else {
            ch.skip(&format!("factorization through {}", d.name));
        }
        if s.target().dim() <= 4 && s.source().dim() <= 4 {
            let z = cofree(s.target(), 1);
            let cert = lifted_right_adjoint(&adj, s, &z)
                .and_then(|r| certify_lifted_adjunction(&r, &samples(f, s.source())))
                .map(|r| r.is_ok());
            ch.result(&format!("lifted right adjoint through {} at cofree(ground)", d.name), cert);
        }
    }
}

fn report_lax(ch: &mut Checks, f: &WorkbenchFile, l: &LaxStructure) {
    ch.report("lax axioms", &l.validate());
    if !l.validate().is_ok() {
        return;
    }
    for d in &f.decls {
        let Value::Adjunction { pairing } = &d.value else { continue };
        if pairing.rows() != l.carrier() {
            continue;
        }
        let Ok(adj) = adjunction_of(pairing) else { continue };
        let rt = kelly_lax_to_oplax(&adj, l).and_then(|s| kelly_oplax_to_lax(&adj, &s)).map(|b| &b == l);
        ch.result(&format!("kelly round trip through {}", d.name), rt);
    }
}

fn report_complex(ch: &mut Checks, x: &ChainComplex) {
    ch.report("d∘d = 0", &x.validate());
    if !x.validate().is_ok() || x.total_dim() > 4 {
        return;
    }
    ch.report("X⊗X is a complex", &tensor_complex(x, x).validate());
    ch.report("[X,X] is a complex", &hom_complex(x, x).validate());
    ch.check("Koszul symmetry is an involution", (koszul_symmetry(x, x) * koszul_symmetry(x, x)).is_identity());
}

fn report_dg(ch: &mut Checks, h: &FinBialgebra, v: &DgComodule) {
    ch.report("dg comodule axioms", &v.validate());
    if !v.validate().is_ok() || 2 * v.complex().total_dim() > 8 {
        ch.skip("graded transfer");
        return;
    }
    for (label, p) in [("mapping", Pairing::Mapping), ("enriched", Pairing::Enriched)] {
        let t = transfer_iso_check(h, v, v, p).map(|c| c.is_ok());
        ch.result(&format!("graded transfer of the {label} object at (V, V)"), t);
    }
}

pub fn report(f: &WorkbenchFile, seed: u64) -> Output {
    let mut ch = Checks { text: String::new(), total: 0, failed: 0 };
    let _ = writeln!(ch.text, "# wb report, seed {seed}");
    let mut rng = random::seeded(seed);
    for d in &f.decls {
        ch.section(d.value.kind(), &d.name);
        match &d.value {
            Value::Coalgebra(c) => report_coalgebra(&mut ch, c, &mut rng),
            Value::Algebra(a) => {
                ch.report("algebra axioms", &a.validate());
                ch.check("dual coalgebra round trip", &dual_algebra(&dual_coalgebra(a)) == a);
            }
            Value::Bialgebra(h) => {
                report_coalgebra(&mut ch, h.coalgebra(), &mut rng);
                report_bialgebra(&mut ch, h, &mut rng);
            }
            Value::Comodule { over, comodule } => report_comodule(&mut ch, f, over, comodule, &mut rng),
            Value::Oplax { structure, .. } => report_oplax(&mut ch, f, structure),
            Value::Lax { structure, .. } => report_lax(&mut ch, f, structure),
            Value::Adjunction { pairing } => match adjunction_of(pairing) {
                Ok(a) => ch.report("triangle identities", &a.validate()),
                Err(r) => ch.report("triangle identities", &r),
            },
            Value::Complex { degrees, differential } => match complex_of(degrees, differential) {
                Ok(x) => report_complex(&mut ch, &x),
                Err(r) => ch.report("d∘d = 0", &r),
            },
            Value::DgComodule { over, degrees, differential, coaction } => {
                let h = bialgebra(f, over).expect("checked by the parser");
                match dg_of(&h, degrees, differential, coaction) {
                    Ok(v) => report_dg(&mut ch, &h, &v),
                    Err(r) => ch.report("dg comodule axioms", &r),
                }
            }
        }
    }
    let _ = writeln!(ch.text, "{} checks, {} failed", ch.total, ch.failed);
    Output { text: ch.text, ok: ch.failed == 0 }
}
