//! Table and result-document writers.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use cpfs::mcdm::Solution;
use cpfs::{round_half_up, Cpfv, Operator};
use serde::Serialize;

use crate::input::ProblemFile;

pub fn fmt_num(x: f64, precision: u32) -> String {
    format!("{:.*}", precision as usize, round_half_up(x, precision))
}

pub struct Tables<'a> {
    pub solution: &'a Solution,
    pub operator: Operator,
    pub precision: u32,
}

fn write_csv(dir: &Path, name: &str, header: &[&str], rows: Vec<Vec<String>>) -> Result<()> {
    let path = dir.join(name);
    let mut w = csv::Writer::from_path(&path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
        .with_context(|| format!("cannot write {}", path.display()))
}

impl Tables<'_> {
    fn num(&self, x: f64) -> String {
        fmt_num(x, self.precision)
    }

    fn cpfv_cells(&self, c: &Cpfv) -> [String; 3] {
        [self.num(c.mu()), self.num(c.nu()), self.num(c.r())]
    }

    /// Writes every intermediate table, the normalized problem as an input
    /// file, `ranking.txt` and `result.json`.
    pub fn write_all(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        let s = self.solution;
        let p = &s.normalized;
        let (alts, crits) = (p.alternatives(), p.criteria());

        let mut rows = Vec::new();
        for (e, m) in p.experts().iter().enumerate() {
            for (i, row) in m.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    rows.push(vec![
                        format!("E{}", e + 1),
                        alts[i].clone(),
                        crits[j].clone(),
                        self.num(c.mu()),
                        self.num(c.nu()),
                    ]);
                }
            }
        }
        write_csv(
            dir,
            "normalized.csv",
            &["expert", "alternative", "criterion", "mu", "nu"],
            rows,
        )?;

        let cells = || {
            s.circular
                .iter()
                .enumerate()
                .flat_map(move |(i, row)| row.iter().enumerate().map(move |(j, c)| (i, j, c)))
        };
        let rows = cells()
            .map(|(i, j, c)| {
                vec![
                    alts[i].clone(),
                    crits[j].clone(),
                    self.num(c.mu()),
                    self.num(c.nu()),
                ]
            })
            .collect();
        write_csv(
            dir,
            "centers.csv",
            &["alternative", "criterion", "mu", "nu"],
            rows,
        )?;

        let mut header = vec!["alternative"];
        header.extend(crits.iter().map(String::as_str));
        let rows = s
            .circular
            .iter()
            .zip(alts)
            .map(|(row, a)| {
                std::iter::once(a.clone())
                    .chain(row.iter().map(|c| self.num(c.r())))
                    .collect()
            })
            .collect();
        write_csv(dir, "radii.csv", &header, rows)?;

        let rows = cells()
            .map(|(i, j, c)| {
                let mut r = vec![alts[i].clone(), crits[j].clone()];
                r.extend(self.cpfv_cells(c));
                r
            })
            .collect();
        write_csv(
            dir,
            "circular.csv",
            &["alternative", "criterion", "mu", "nu", "r"],
            rows,
        )?;

        let rows = s
            .aggregated
            .iter()
            .zip(alts)
            .map(|(c, a)| {
                let mut r = vec![a.clone()];
                r.extend(self.cpfv_cells(c));
                r
            })
            .collect();
        write_csv(
            dir,
            "aggregated.csv",
            &["alternative", "mu", "nu", "r"],
            rows,
        )?;

        let rows = s
            .ranking
            .entries()
            .iter()
            .enumerate()
            .map(|(rank, e)| {
                vec![
                    e.label.clone(),
                    self.num(e.score),
                    (rank + 1).to_string(),
                    e.tied.to_string(),
                ]
            })
            .collect();
        write_csv(
            dir,
            "similarity.csv",
            &["alternative", "score", "rank", "tied"],
            rows,
        )?;

        let problem = dir.join("normalized.json");
        let mut f = fs::File::create(&problem)
            .with_context(|| format!("cannot create {}", problem.display()))?;
        serde_json::to_writer_pretty(&mut f, &ProblemFile::from_problem(p))?;
        writeln!(f)?;

        let ranking = dir.join("ranking.txt");
        fs::write(&ranking, format!("{}\n", s.ranking.ascending()))
            .with_context(|| format!("cannot write {}", ranking.display()))?;

        let result = dir.join("result.json");
        let mut f = fs::File::create(&result)
            .with_context(|| format!("cannot create {}", result.display()))?;
        serde_json::to_writer_pretty(&mut f, &ResultDoc::new(s, self.operator))?;
        writeln!(f)?;
        Ok(())
    }
}

#[derive(Serialize)]
struct CpfvDoc {
    mu: f64,
    nu: f64,
    r: f64,
}

impl From<&Cpfv> for CpfvDoc {
    fn from(c: &Cpfv) -> Self {
        Self {
            mu: c.mu(),
            nu: c.nu(),
            r: c.r(),
        }
    }
}

#[derive(Serialize)]
struct AlternativeDoc {
    alternative: String,
    aggregated: CpfvDoc,
    score: f64,
    rank: usize,
    tied: bool,
}

/// Full-precision summary of a run.
#[derive(Serialize)]
struct ResultDoc {
    operator: &'static str,
    ranking: String,
    best: Option<String>,
    /// In input order.
    alternatives: Vec<AlternativeDoc>,
    circular: Vec<Vec<CpfvDoc>>,
}

impl ResultDoc {
    fn new(s: &Solution, operator: Operator) -> Self {
        let mut ranked: Vec<(usize, AlternativeDoc)> = s
            .ranking
            .entries()
            .iter()
            .enumerate()
            .map(|(rank, e)| {
                let doc = AlternativeDoc {
                    alternative: e.label.clone(),
                    aggregated: (&s.aggregated[e.index]).into(),
                    score: e.score,
                    rank: rank + 1,
                    tied: e.tied,
                };
                (e.index, doc)
            })
            .collect();
        ranked.sort_by_key(|(index, _)| *index);
        let alternatives = ranked.into_iter().map(|(_, doc)| doc).collect();
        Self {
            operator: operator.id(),
            ranking: s.ranking.ascending(),
            best: s.ranking.best().map(|e| e.label.clone()),
            alternatives,
            circular: s
                .circular
                .iter()
                .map(|row| row.iter().map(CpfvDoc::from).collect())
                .collect(),
        }
    }
}
