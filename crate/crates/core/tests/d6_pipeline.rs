use modcat_core::cat_d::CategoryD;
use modcat_core::io::{fixtures_dir, matrix_csv, read_text, Bundle};
use modcat_core::modular::build_modular_data;
use modcat_core::oracle::{build_all, run_dx_checks, run_module_checks, PairSelection};
use modcat_core::Cyclotomic;

fn d6() -> (Bundle, CategoryD) {
    let b = Bundle::load(&fixtures_dir().join("d6")).unwrap();
    let cat = CategoryD::new(&b.factor).unwrap();
    let cat = cat.reordered(b.ordering.as_ref().unwrap()).unwrap();
    (b, cat)
}

#[test]
fn golden_s_tilde() {
    let (b, cat) = d6();
    let md = build_modular_data(&cat);
    let want = read_text(&b.path("S_tilde.csv")).unwrap();
    assert_eq!(matrix_csv(&md.labels, &md.s_tilde), want);
    for r in &md.report {
        assert_eq!(r.holds, Some(true), "{}", r.name);
    }
    assert_eq!(&md.p_plus * &md.p_minus, Cyclotomic::from_int(6, 144));
    assert!(md.c.is_identity());
}

#[test]
fn oracle_sampled() {
    let (_, cat) = d6();
    let mods = build_all(&cat).unwrap();
    let rep = run_module_checks(&cat, &mods, PairSelection::Sample(37)).unwrap();
    for c in &rep.checks {
        assert!(c.pass, "{}: {}", c.name, c.detail);
    }
    let dx = run_dx_checks(&cat, &mods, PairSelection::Sample(97));
    for c in &dx {
        if c.name == "intertwining (literal psi)" {
            assert_eq!(c.detail, "12 of 32 simples fail");
        } else {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
    }
}
