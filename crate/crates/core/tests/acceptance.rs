//! End-to-end criteria on the bundled D6 data and the small groups.
//! One line per criterion; nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use modcat_core::cat_d::CategoryD;
use modcat_core::error::FactorError;
use modcat_core::io::{fixtures_dir, matrix_csv, read_text, Bundle, PrintedTable, ThetaTable};
use modcat_core::modular::{build_modular_data, verify_modular};
use modcat_core::oracle::{build_all, run_dx_checks, run_module_checks, PairSelection};
use modcat_core::{CosetFactorization, Cyclotomic};

type Outcome = Result<String, String>;

fn bundle(name: &str) -> Bundle {
    Bundle::load(&fixtures_dir().join(name)).expect("fixture bundle")
}

fn d6() -> (Bundle, CategoryD) {
    let b = bundle("d6");
    let cat = CategoryD::new(&b.factor).expect("category");
    let cat = cat.reordered(b.ordering.as_ref().expect("ordering")).expect("ordering resolves");
    (b, cat)
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn character_tables() -> Outcome {
    let b = bundle("d6");
    let n = b.group.exponent() as u32;
    for i in 1..=4 {
        let cmp = PrintedTable::load(&b.path(&format!("table{i}.json")))
            .and_then(|t| t.compare(&b.group, n))
            .map_err(|e| e.to_string())?;
        ensure(cmp.matches, format!("table {i}: unmatched rows {:?}", cmp.unmatched))?;
    }
    Ok("4 tables match".into())
}

fn ribbon_scalars() -> Outcome {
    let (b, cat) = d6();
    let t = ThetaTable::load(&b.path("theta.json")).map_err(|e| e.to_string())?;
    let bad = t.mismatches(&cat);
    ensure(bad.is_empty(), format!("mismatched {bad:?}"))?;
    Ok(format!("{} scalars match", t.order.len()))
}

fn s_matrix() -> Outcome {
    let (b, cat) = d6();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(|e| e.to_string())?;
    let md = pool.install(|| build_modular_data(&cat));
    let want = read_text(&b.path("S_tilde.csv")).map_err(|e| e.to_string())?;
    let got = matrix_csv(&md.labels, &md.s_tilde);
    ensure(
        got == want,
        format!("first difference at {:?}", modcat_core::io::csv_first_difference(&got, &want)),
    )?;
    Ok("32x32 matches, single thread".into())
}

fn relations() -> Outcome {
    let (_, cat) = d6();
    let md = build_modular_data(&cat);
    let n = cat.n;
    let k = cat.len();
    ensure(md.c.is_identity(), "C is not the identity")?;
    ensure(&md.p_plus * &md.p_minus == Cyclotomic::from_int(n, 144), "P+ P- != 144")?;
    ensure(md.d == Some(Cyclotomic::from_int(n, 12)), "sqrt(P+P-) != 12")?;
    let st = &md.s_tilde * &md.t;
    let lhs = &md.s_tilde * &md.s_tilde;
    let rhs = st.pow(3).scale(&Cyclotomic::from_rational(n, num_rational::BigRational::new(1.into(), 12.into())));
    ensure(lhs == rhs, "S~^2 != (1/12)(S~T)^3")?;
    for name in [
        "CS~ = S~C",
        "CT = TC",
        "C^2 = 1",
        "(ST)^3 = sqrt(P+/P-) S^2",
        "S^2 = C",
    ] {
        let r = md.check(name).ok_or(format!("{name} missing"))?;
        ensure(r.holds == Some(true), format!("{name}: {:?}", r.first_difference))?;
    }
    ensure(md.c == modcat_core::CMat::identity(k, n), "C != I_32")?;
    Ok(format!("all hold, P+ = {}, P- = {}", md.p_plus.render(), md.p_minus.render()))
}

fn oracle_equivalence() -> Outcome {
    let (_, cat) = d6();
    let mods = build_all(&cat).map_err(|e| e.to_string())?;
    let rep = run_module_checks(&cat, &mods, PairSelection::All).map_err(|e| e.to_string())?;
    for c in &rep.checks {
        ensure(c.pass, format!("{}: {} {:?}", c.name, c.detail, rep.first_mismatch))?;
    }
    Ok(format!("{} pairs, {} checks", rep.pairs_checked, rep.checks.len()))
}

fn property_suite() -> Outcome {
    let mut nontrivial_c = false;
    for name in ["s3", "z3", "d4", "q8"] {
        let b = bundle(name);
        let cat = CategoryD::new(&b.factor).map_err(|e| e.to_string())?;
        let g = cat.f.group();
        let k = cat.len();
        let total: usize = (0..k).map(|i| cat.dim(i) * cat.dim(i)).sum();
        ensure(total == g.order() * g.order(), format!("{name}: sum dim^2 = {total}"))?;
        for i in 0..k {
            ensure(cat.dual(cat.dual(i)) == i, format!("{name}: dual not involutive"))?;
            ensure(cat.theta(cat.dual(i)) == cat.theta(i), format!("{name}: Theta(V*) != Theta(V)"))?;
        }
        let md = build_modular_data(&cat);
        for must in [
            "S~ symmetric",
            "S~_{V,1} = dim V",
            "(S~T)^3 = P+ S~^2",
            "S~^2 = P+ P- C",
            "(S~T)^6 = (P+)^2 S~^4",
        ] {
            let r = md.check(must).ok_or(format!("{must} missing"))?;
            ensure(r.holds == Some(true), format!("{name}: {must} fails"))?;
        }
        ensure(md.all_hold(), format!("{name}: some relation fails"))?;
        ensure(verify_modular(&cat, &md).s_tilde_invertible, format!("{name}: S~ singular"))?;
        if name == "z3" {
            nontrivial_c = !md.c.is_identity();
        }
    }
    ensure(nontrivial_c, "Z3 charge conjugation is trivial")?;
    Ok("S3, Z3, D4, Q8; C != I for Z3".into())
}

fn functor() -> Outcome {
    let (_, cat) = d6();
    let mods = build_all(&cat).map_err(|e| e.to_string())?;
    let checks = run_dx_checks(&cat, &mods, PairSelection::All);
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} ({})", c.name, c.detail))
        .collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    let antipode = checks.iter().any(|c| c.name == "intertwining (antipode psi)" && c.pass);
    ensure(
        failed.is_empty(),
        format!(
            "{passed} of {} pass; failing: {}{}",
            checks.len(),
            failed.join("; "),
            if antipode { "; antipode form of psi holds on all simples" } else { "" }
        ),
    )?;
    Ok(format!("{} checks", checks.len()))
}

fn matched_pair() -> Outcome {
    let b = bundle("d6");
    let bad: Vec<_> = b.factor.check_invariants().into_iter().filter(|c| !c.holds).collect();
    ensure(bad.is_empty(), format!("invariants fail: {:?}", bad.iter().map(|c| c.name).collect::<Vec<_>>()))?;
    let g = b.factor.subgroup().clone();
    let m = b.group.parse_elements("e,b").map_err(|e| e.to_string())?;
    match CosetFactorization::build(&b.group, &g, &m) {
        Err(FactorError::NotATransversal(_)) => Ok("invariants hold; {e,b} rejected".into()),
        other => Err(format!("{{e,b}} gave {:?}", other.map(|_| ()))),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("1 character tables", character_tables, Duration::from_secs(1)),
        ("2 ribbon scalars", ribbon_scalars, Duration::from_secs(1)),
        ("3 S~ matrix", s_matrix, Duration::from_secs(30)),
        ("4 relations", relations, Duration::from_secs(5)),
        ("5 oracle equivalence", oracle_equivalence, Duration::from_secs(600)),
        ("6 property suite", property_suite, Duration::from_secs(120)),
        ("7 functor to D(X)-modules", functor, Duration::from_secs(300)),
        ("8 matched pair", matched_pair, Duration::from_secs(5)),
    ];
    let mut all = true;
    for (name, run, budget) in criteria {
        let t = Instant::now();
        let out = run();
        let dt = t.elapsed();
        let out = match out {
            Ok(m) if dt > budget => Err(format!("{m}, but took {dt:.2?} > {budget:?}")),
            o => o,
        };
        match out {
            Ok(m) => println!("criterion {name}: PASS ({m}; {dt:.2?})"),
            Err(m) => {
                all = false;
                println!("criterion {name}: FAIL ({m}; {dt:.2?})");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
