//! `modcat`: character tables, coset data, simples and modular data of the
//! double of a finite group.
//!
//! Exit codes: 0 ok, 1 usage, 2 verification failure, 3 invalid input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modcat_core::cat_c::CategoryC;
use modcat_core::cat_d::{CategoryD, OrderingFile};
use modcat_core::chartable::subgroup_table;
use modcat_core::io::{self, Bundle, PrintedTable, ThetaTable};
use modcat_core::modular::{build_modular_data, verify_modular, ModularData};
use modcat_core::oracle::{build_all, run_dx_checks, run_module_checks, PairSelection};
use modcat_core::{CosetFactorization, FiniteGroup};
use serde_json::json;

#[derive(Parser)]
#[command(name = "modcat", version, about = "Exact modular data for doubles of finite groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Character table of the group or of a subgroup.
    Chartable(Common),
    /// Coset data of a subgroup and transversal, with invariant checks.
    Factor(Common),
    /// List the simple objects.
    Simples {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "d")]
        category: Category,
    },
    /// Write S~, S, T, C and the relation report.
    Stmatrices(Common),
    /// Run checks; nonzero exit on failure.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated: relations, golden, chartables, oracle, functor.
        #[arg(long, default_value = "relations")]
        check: String,
        /// S~ CSV to compare against (defaults to S_tilde.csv in the bundle).
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, default_value = "all")]
        pairs: String,
    },
    /// Compare the explicit-module oracle with the formulas.
    OracleCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        pairs: String,
        /// Also run the checks of the passage to D(X)-modules.
        #[arg(long)]
        functor: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Category {
    C,
    D,
}

#[derive(Args, Clone)]
struct Common {
    /// Directory with bundle.json; other flags override it.
    #[arg(long)]
    bundle: Option<PathBuf>,
    /// Group JSON file.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Comma-separated element names.
    #[arg(long)]
    subgroup: Option<String>,
    #[arg(long)]
    transversal: Option<String>,
    #[arg(long)]
    ordering: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

enum Failure {
    Usage(String),
    Verify(String),
    Input(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

struct Setup {
    group: FiniteGroup,
    subgroup: Option<String>,
    transversal: Option<String>,
    ordering: Option<OrderingFile>,
    bundle: Option<Bundle>,
}

impl Common {
    fn setup(&self) -> Res<Setup> {
        let bundle = self.bundle.as_deref().map(Bundle::load).transpose()?;
        let group = match (&self.group, &bundle) {
            (Some(p), _) => io::load_group(p)?,
            (None, Some(b)) => b.group.clone(),
            (None, None) => return Err(Failure::Usage("one of --group or --bundle is required".into())),
        };
        let subgroup = self.subgroup.clone().or_else(|| bundle.as_ref().map(|b| b.spec.subgroup.clone()));
        let transversal = self.transversal.clone().or_else(|| {
            if self.subgroup.is_some() {
                None
            } else {
                bundle.as_ref().and_then(|b| b.spec.transversal.clone())
            }
        });
        let ordering = match (&self.ordering, &bundle) {
            (Some(p), _) => Some(io::load_ordering(p)?),
            (None, Some(b)) => b.ordering.clone(),
            _ => None,
        };
        Ok(Setup {
            group,
            subgroup,
            transversal,
            ordering,
            bundle,
        })
    }

    fn out_dir(&self) -> Res<Option<PathBuf>> {
        if let Some(d) = &self.out {
            fs::create_dir_all(d).map_err(|e| Failure::Input(format!("{}: {e}", d.display())))?;
        }
        Ok(self.out.clone())
    }
}

impl Setup {
    fn factor(&self) -> Res<CosetFactorization> {
        let sub = self
            .subgroup
            .as_deref()
            .ok_or_else(|| Failure::Usage("--subgroup is required".into()))?;
        Ok(io::factorization(&self.group, sub, self.transversal.as_deref())?)
    }

    fn category(&self) -> Res<CategoryD> {
        let cat = CategoryD::new(&self.factor()?)?;
        Ok(match &self.ordering {
            Some(o) => cat.reordered(o)?,
            None => cat,
        })
    }
}

fn write(dir: &Path, name: &str, text: &str) -> Res<()> {
    let p = dir.join(name);
    fs::write(&p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
}

fn emit(out: &Option<PathBuf>, name: &str, text: &str) -> Res<()> {
    match out {
        Some(d) => write(d, name, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn cmd_chartable(c: &Common) -> Res<()> {
    let s = c.setup()?;
    let out = c.out_dir()?;
    let g = &s.group;
    let h = match &c.subgroup {
        Some(list) => g.subgroup(&g.parse_elements(list)?)?,
        None => g.whole(),
    };
    let t = subgroup_table(g, &h)?;
    let n = g.exponent() as u32;
    if out.is_some() {
        emit(&out, "chartable.json", &io::chartable_json(g, &t, n))?;
    }
    emit(&out, "chartable.csv", &io::chartable_csv(g, &t, n))
}

fn cmd_factor(c: &Common) -> Res<()> {
    let s = c.setup()?;
    let f = s.factor()?;
    let tables = f.tables();
    emit(&c.out_dir()?, "factor.json", &pretty(&tables))?;
    if tables.invariants.iter().all(|i| i.holds) {
        Ok(())
    } else {
        Err(Failure::Verify("factorization invariants fail".into()))
    }
}

fn cmd_simples(c: &Common, category: Category) -> Res<()> {
    let s = c.setup()?;
    let text = match category {
        Category::D => {
            let cat = s.category()?;
            pretty(&(0..cat.len()).map(|k| cat.summary(k)).collect::<Vec<_>>())
        }
        Category::C => {
            let cat = CategoryC::new(&s.factor()?)?;
            let g = &s.group;
            let rows: Vec<_> = cat
                .simples
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    json!({
                        "index": i,
                        "label": x.label,
                        "base": g.name(x.base),
                        "orbit": x.orbit.iter().map(|&m| g.name(m)).collect::<Vec<_>>(),
                        "stabilizer": x.stab.elements().iter().map(|&m| g.name(m)).collect::<Vec<_>>(),
                        "degree": x.chi.degree(),
                        "dual": cat.simples[cat.dual(i)].label,
                    })
                })
                .collect();
            pretty(&rows)
        }
    };
    emit(&c.out_dir()?, "simples.json", &text)
}

fn report_json(md: &ModularData, cat: &CategoryD) -> String {
    let v = verify_modular(cat, md);
    pretty(&json!({
        "labels": md.labels,
        "dims": md.dims,
        "theta": md.theta.iter().map(|t| t.render()).collect::<Vec<_>>(),
        "P+": md.p_plus.render(),
        "P-": md.p_minus.render(),
        "sqrt(P+P-)": md.d.as_ref().map(|d| d.render()),
        "relations": md.report,
        "modular": v,
    }))
}

fn cmd_stmatrices(c: &Common) -> Res<()> {
    let s = c.setup()?;
    let out = c.out_dir()?.ok_or_else(|| Failure::Usage("--out is required".into()))?;
    let cat = s.category()?;
    let md = build_modular_data(&cat);
    let l = &md.labels;
    let mut mats = vec![("S_tilde", &md.s_tilde), ("T", &md.t), ("C", &md.c)];
    if let Some(sm) = &md.s {
        mats.push(("S", sm));
    }
    for (name, m) in mats {
        write(&out, &format!("{name}.json"), &io::matrix_json(l, m))?;
        write(&out, &format!("{name}.csv"), &io::matrix_csv(l, m))?;
    }
    write(&out, "report.json", &report_json(&md, &cat))?;
    println!("{} simples; relations {}", l.len(), if md.all_hold() { "hold" } else { "FAIL" });
    Ok(())
}

fn parse_pairs(p: &str) -> Res<PairSelection> {
    PairSelection::parse(p).ok_or_else(|| Failure::Usage(format!("bad --pairs {p:?}; use all or sample:N")))
}

fn oracle_lines(cat: &CategoryD, sel: PairSelection, modules: bool, functor: bool) -> Res<(bool, Vec<String>)> {
    let mods = build_all(cat)?;
    let mut lines = Vec::new();
    let mut ok = true;
    let tag = |pass: bool| if pass { "ok  " } else { "FAIL" };
    if modules {
        let rep = run_module_checks(cat, &mods, sel)?;
        ok &= rep.all_pass();
        for ch in &rep.checks {
            lines.push(format!("{} {}: {}", tag(ch.pass), ch.name, ch.detail));
        }
        if let Some(m) = &rep.first_mismatch {
            lines.push(format!("first mismatch: V={} W={} formula={} oracle={}", m.v, m.w, m.formula, m.oracle));
        }
    }
    if functor {
        for ch in run_dx_checks(cat, &mods, sel) {
            ok &= ch.pass;
            lines.push(format!("{} {}: {}", tag(ch.pass), ch.name, ch.detail));
        }
    }
    Ok((ok, lines))
}

fn cmd_oracle(c: &Common, pairs: &str, functor: bool) -> Res<()> {
    let sel = parse_pairs(pairs)?;
    let cat = c.setup()?.category()?;
    let (ok, lines) = oracle_lines(&cat, sel, true, functor)?;
    for l in lines {
        println!("{l}");
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify("oracle disagrees".into()))
    }
}

fn cmd_verify(c: &Common, checks: &str, golden: Option<&Path>, pairs: &str) -> Res<()> {
    let s = c.setup()?;
    let sel = parse_pairs(pairs)?;
    let cat = s.category()?;
    let mut failed = Vec::new();
    let mut md = None;
    for check in checks.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        match check {
            "relations" => {
                let m = md.get_or_insert_with(|| build_modular_data(&cat));
                for r in &m.report {
                    let status = match r.holds {
                        Some(true) => "ok  ",
                        Some(false) => "FAIL",
                        None => "skip",
                    };
                    let at = r.first_difference.map(|(i, j)| format!(" at ({i},{j})")).unwrap_or_default();
                    let note = r.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
                    println!("{status} {}{at}{note}", r.name);
                }
                if !m.all_hold() {
                    failed.push("relations");
                }
            }
            "golden" => {
                let path = match (golden, &s.bundle) {
                    (Some(p), _) => p.to_path_buf(),
                    (None, Some(b)) => b.path("S_tilde.csv"),
                    _ => return Err(Failure::Usage("golden check needs --golden or --bundle".into())),
                };
                let want = io::read_text(&path)?;
                let m = md.get_or_insert_with(|| build_modular_data(&cat));
                let got = io::matrix_csv(&m.labels, &m.s_tilde);
                match io::csv_first_difference(&got, &want) {
                    None => println!("ok   S~ matches {}", path.display()),
                    Some((line, field)) => {
                        println!("FAIL S~ differs from {} at line {line}, field {field}", path.display());
                        failed.push("golden");
                    }
                }
            }
            "chartables" => {
                let b = s
                    .bundle
                    .as_ref()
                    .ok_or_else(|| Failure::Usage("chartables check needs --bundle".into()))?;
                let n = s.group.exponent() as u32;
                for i in 1.. {
                    let p = b.path(&format!("table{i}.json"));
                    if !p.exists() {
                        break;
                    }
                    let cmp = PrintedTable::load(&p)?.compare(&s.group, n)?;
                    println!(
                        "{} {}: unmatched {:?}",
                        if cmp.matches { "ok  " } else { "FAIL" },
                        p.display(),
                        cmp.unmatched
                    );
                    if !cmp.matches {
                        failed.push("chartables");
                    }
                }
                let p = b.path("theta.json");
                if p.exists() {
                    let bad = ThetaTable::load(&p)?.mismatches(&cat);
                    println!("{} {}: mismatched {:?}", if bad.is_empty() { "ok  " } else { "FAIL" }, p.display(), bad);
                    if !bad.is_empty() {
                        failed.push("theta");
                    }
                }
            }
            "oracle" | "functor" => {
                let (ok, lines) = oracle_lines(&cat, sel, check == "oracle", check == "functor")?;
                for l in lines {
                    println!("{l}");
                }
                if !ok {
                    failed.push(check);
                }
            }
            other => return Err(Failure::Usage(format!("unknown check {other:?}"))),
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verify(format!("failed: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Res<()> {
    let common = match &cli.cmd {
        Cmd::Chartable(c) | Cmd::Factor(c) | Cmd::Stmatrices(c) => c,
        Cmd::Simples { common, .. } | Cmd::Verify { common, .. } | Cmd::OracleCheck { common, .. } => common,
    };
    if let Some(t) = common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match &cli.cmd {
        Cmd::Chartable(c) => cmd_chartable(c),
        Cmd::Factor(c) => cmd_factor(c),
        Cmd::Simples { common, category } => cmd_simples(common, *category),
        Cmd::Stmatrices(c) => cmd_stmatrices(c),
        Cmd::Verify {
            common,
            check,
            golden,
            pairs,
        } => cmd_verify(common, check, golden.as_deref(), pairs),
        Cmd::OracleCheck { common, pairs, functor } => cmd_oracle(common, pairs, *functor),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("usage: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Input(m)) => {
            eprintln!("invalid input: {m}");
            ExitCode::from(3)
        }
    }
}
