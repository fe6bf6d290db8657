//! CSV and JSON renderings of tables and matrices.
//!
//! CSV cells use the exact `render` form with `w = exp(2 pi i / n)`, declared
//! on the first line.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cat_d::{CategoryD, OrderingFile};
use crate::chartable::{subgroup_table, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{GroupError, InputError};
use crate::group::{FiniteGroup, GroupSpec};
use crate::linalg::CMat;
use crate::matched_pair::CosetFactorization;

pub fn csv_header(n: u32) -> String {
    format!("# w = exp(2*pi*i/{n})\n")
}

/// Square matrix with labeled rows and columns.
pub fn matrix_csv(labels: &[String], m: &CMat) -> String {
    let mut out = csv_header(m.conductor());
    out.push_str("label");
    for l in labels {
        out.push(',');
        out.push_str(l);
    }
    out.push('\n');
    for (i, l) in labels.iter().enumerate() {
        out.push_str(l);
        for j in 0..m.cols() {
            out.push(',');
            out.push_str(&m[(i, j)].render());
        }
        out.push('\n');
    }
    out
}

/// First cell `(line, field)` where two CSV texts differ, both 0-based;
/// `None` if identical.
pub fn csv_first_difference(a: &str, b: &str) -> Option<(usize, usize)> {
    let la: Vec<&str> = a.lines().collect();
    let lb: Vec<&str> = b.lines().collect();
    for i in 0..la.len().max(lb.len()) {
        let (Some(x), Some(y)) = (la.get(i), lb.get(i)) else {
            return Some((i, 0));
        };
        if x == y {
            continue;
        }
        let fx: Vec<&str> = x.split(',').collect();
        let fy: Vec<&str> = y.split(',').collect();
        let j = (0..fx.len().max(fy.len()))
            .find(|&j| fx.get(j) != fy.get(j))
            .unwrap_or(0);
        return Some((i, j));
    }
    (a != b).then_some((la.len(), 0))
}

#[derive(Serialize)]
pub struct MatrixJson<'a> {
    pub labels: &'a [String],
    pub n: u32,
    pub entries: Vec<Vec<&'a Cyclotomic>>,
    pub rendered: Vec<Vec<String>>,
    /// `[re, im]`
    pub approx: Vec<Vec<[f64; 2]>>,
}

pub fn matrix_json(labels: &[String], m: &CMat) -> String {
    let j = MatrixJson {
        labels,
        n: m.conductor(),
        entries: (0..m.rows()).map(|i| (0..m.cols()).map(|c| &m[(i, c)]).collect()).collect(),
        rendered: (0..m.rows())
            .map(|i| (0..m.cols()).map(|c| m[(i, c)].render()).collect())
            .collect(),
        approx: (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|c| {
                        let z = m[(i, c)].to_complex();
                        [z.re, z.im]
                    })
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable") + "\n"
}

#[derive(Serialize)]
pub struct CharTableJson {
    pub elements: Vec<String>,
    /// Class members by name, in column order.
    pub classes: Vec<Vec<String>>,
    pub degrees: Vec<usize>,
    pub n: u32,
    pub rows: Vec<Vec<Cyclotomic>>,
    pub rendered: Vec<Vec<String>>,
    pub prime: u64,
}

pub fn chartable_json(parent: &FiniteGroup, t: &CharacterTable, n: u32) -> String {
    let nm = |local: usize| parent.name(t.parent[local]).to_string();
    let rows: Vec<Vec<Cyclotomic>> = t.rows.iter().map(|r| r.iter().map(|v| v.lift(n)).collect()).collect();
    let j = CharTableJson {
        elements: (0..t.order()).map(nm).collect(),
        classes: t.classes.iter().map(|c| c.members.iter().map(|&m| nm(m)).collect()).collect(),
        degrees: t.degrees.clone(),
        n,
        rendered: rows.iter().map(|r| r.iter().map(|v| v.render()).collect()).collect(),
        rows,
        prime: t.prime,
    };
    serde_json::to_string_pretty(&j).expect("serializable") + "\n"
}

/// One column per class, headed by its members joined with `|`.
pub fn chartable_csv(parent: &FiniteGroup, t: &CharacterTable, n: u32) -> String {
    let mut out = csv_header(n);
    out.push_str("irrep");
    for c in &t.classes {
        out.push(',');
        let names: Vec<&str> = c.members.iter().map(|&m| parent.name(t.parent[m])).collect();
        out.push_str(&names.join("|"));
    }
    out.push('\n');
    for (r, row) in t.rows.iter().enumerate() {
        out.push_str(&format!("chi{r}"));
        for v in row {
            out.push(',');
            out.push_str(&v.lift(n).render());
        }
        out.push('\n');
    }
    out
}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, InputError> {
    let spec = GroupSpec::from_json(&read_text(path)?).map_err(|e| InputError::Parse {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    Ok(spec.build()?)
}

pub fn load_ordering(path: &Path) -> Result<OrderingFile, InputError> {
    Ok(OrderingFile::from_json(&read_text(path)?)?)
}

/// Subgroup and transversal from comma-separated element names. Without a
/// transversal one is chosen automatically.
pub fn factorization(group: &FiniteGroup, subgroup: &str, transversal: Option<&str>) -> Result<CosetFactorization, InputError> {
    let g = group.subgroup(&group.parse_elements(subgroup)?)?;
    Ok(match transversal {
        Some(t) => CosetFactorization::build(group, &g, &group.parse_elements(t)?)?,
        None => CosetFactorization::build_auto(group, &g)?,
    })
}

/// Directory holding `bundle.json` with paths relative to it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BundleFile {
    pub group: String,
    pub subgroup: String,
    #[serde(default)]
    pub transversal: Option<String>,
    #[serde(default)]
    pub ordering: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Bundle {
    pub dir: PathBuf,
    pub spec: BundleFile,
    pub group: FiniteGroup,
    pub factor: CosetFactorization,
    pub ordering: Option<OrderingFile>,
}

impl Bundle {
    pub fn load(dir: &Path) -> Result<Self, InputError> {
        let bpath = dir.join("bundle.json");
        let spec: BundleFile = serde_json::from_str(&read_text(&bpath)?).map_err(|e| InputError::Parse {
            path: bpath.display().to_string(),
            msg: e.to_string(),
        })?;
        let group = load_group(&dir.join(&spec.group))?;
        let factor = factorization(&group, &spec.subgroup, spec.transversal.as_deref())?;
        let ordering = spec.ordering.as_ref().map(|o| load_ordering(&dir.join(o))).transpose()?;
        Ok(Bundle {
            dir: dir.to_path_buf(),
            spec,
            group,
            factor,
            ordering,
        })
    }

    pub fn path(&self, file: &str) -> PathBuf {
        self.dir.join(file)
    }
}

/// A character table as printed: rows by label, values at one element per
/// column.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrintedTable {
    pub subgroup: Vec<String>,
    pub columns: Vec<String>,
    pub rows: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableComparison {
    pub matches: bool,
    /// Printed rows with no computed counterpart.
    pub unmatched: Vec<String>,
    pub computed_rows: usize,
}

impl PrintedTable {
    pub fn load(path: &Path) -> Result<Self, InputError> {
        serde_json::from_str(&read_text(path)?).map_err(|e| InputError::Parse {
            path: path.display().to_string(),
            msg: e.to_string(),
        })
    }

    /// Compare with the computed table of the subgroup, as sets of rows.
    pub fn compare(&self, group: &FiniteGroup, n: u32) -> Result<TableComparison, InputError> {
        let h = group.subgroup(&group.parse_elements(&self.subgroup.join(","))?)?;
        let t = subgroup_table(group, &h).map_err(|e| InputError::Parse {
            path: "character table".into(),
            msg: e.to_string(),
        })?;
        let cols: Vec<usize> = self
            .columns
            .iter()
            .map(|c| group.index_of(c).and_then(|g| t.parent.binary_search(&g).map_err(|_| GroupError::UnknownElement(c.clone()))))
            .collect::<Result<_, _>>()?;
        let mut computed: Vec<Vec<Cyclotomic>> = (0..t.rows.len())
            .map(|r| cols.iter().map(|&c| t.value(r, c).lift(n)).collect())
            .collect();
        let mut unmatched = Vec::new();
        for (label, vals) in &self.rows {
            let want: Vec<Cyclotomic> = vals
                .iter()
                .map(|v| Cyclotomic::parse(v, n))
                .collect::<Result<_, _>>()
                .map_err(|e| InputError::Parse {
                    path: label.clone(),
                    msg: e.to_string(),
                })?;
            match computed.iter().position(|r| *r == want) {
                Some(i) => {
                    computed.remove(i);
                }
                None => unmatched.push(label.clone()),
            }
        }
        Ok(TableComparison {
            matches: unmatched.is_empty() && computed.is_empty(),
            unmatched,
            computed_rows: t.rows.len(),
        })
    }
}

/// Ribbon scalars by label.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThetaTable {
    pub order: Vec<String>,
    pub theta: BTreeMap<String, String>,
}

impl ThetaTable {
    pub fn load(path: &Path) -> Result<Self, InputError> {
        serde_json::from_str(&read_text(path)?).map_err(|e| InputError::Parse {
            path: path.display().to_string(),
            msg: e.to_string(),
        })
    }

    /// Labels whose ribbon scalar differs, or that are missing.
    pub fn mismatches(&self, cat: &CategoryD) -> Vec<String> {
        let labels = cat.labels();
        self.order
            .iter()
            .filter(|l| {
                let Some(k) = labels.iter().position(|x| x == *l) else {
                    return true;
                };
                let want = self.theta.get(*l).and_then(|v| Cyclotomic::parse(v, cat.n).ok());
                want.as_ref() != Some(&cat.theta(k))
            })
            .cloned()
            .collect()
    }
}

/// The fixtures shipped with this crate.
pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_roundtrip_and_diff() {
        let n = 6;
        let m = CMat::from_rows(
            vec![
                vec![Cyclotomic::from_int(n, 1), Cyclotomic::zeta(n, 2)],
                vec![Cyclotomic::zeta(n, 2), Cyclotomic::from_int(n, -1)],
            ],
            n,
        );
        let labels = vec!["x".to_string(), "y".to_string()];
        let s = matrix_csv(&labels, &m);
        assert_eq!(s, "# w = exp(2*pi*i/6)\nlabel,x,y\nx,1,w^2\ny,w^2,-1\n");
        assert_eq!(csv_first_difference(&s, &s), None);
        let t = s.replace("y,w^2,-1", "y,w^2,1");
        assert_eq!(csv_first_difference(&s, &t), Some((3, 2)));
    }
}
