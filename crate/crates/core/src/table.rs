//! Geometric property table (singular, irreducible, equidimensional) for
//! type A semisimple Hessenberg varieties, filled only where a pipeline
//! decides the answer.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::components::{
    cell_dimension, check_hessenberg_function, component_data, hessenberg_from_function,
    make_semisimple, standard_hessenberg_function,
};
use crate::error::{Error, Result};
use crate::patch::{singular_scan, type_a_group, LocalDimSource};
use crate::rational::parse_rationals;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cell {
    Yes,
    No,
    OutOfScope,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cell::Yes => "Yes",
            Cell::No => "No",
            Cell::OutOfScope => "n/a(out-of-scope)",
        })
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        if b {
            Cell::Yes
        } else {
            Cell::No
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub h: Vec<usize>,
    pub s: Vec<String>,
    /// Sizes of the eigenvalue multiplicities, largest first.
    pub blocks: Vec<usize>,
    pub singular: Cell,
    pub irreducible: Cell,
    pub equidimensional: Cell,
    /// `flag-variety`, `components` or `tangent-scan`.
    pub method: String,
}

/// Diagonal entries used for each block pattern of the built-in rows.
pub fn values_for_blocks(blocks: &[usize]) -> Option<Vec<i64>> {
    Some(match blocks {
        [2, 1] => vec![1, 1, -1],
        [3, 1] => vec![1, 1, 1, -1],
        [2, 2] => vec![1, 1, -1, -1],
        [2, 1, 1] => vec![2, 2, -1, -3],
        _ => return None,
    })
}

/// `(h, blocks)` of the built-in rows.
pub const BUILTIN_ROWS: [(&[usize], &[usize]); 10] = [
    (&[2, 3, 3], &[2, 1]),
    (&[2, 3, 4, 4], &[3, 1]),
    (&[2, 4, 4, 4], &[3, 1]),
    (&[3, 4, 4, 4], &[3, 1]),
    (&[2, 3, 4, 4], &[2, 2]),
    (&[2, 4, 4, 4], &[2, 2]),
    (&[3, 4, 4, 4], &[2, 2]),
    (&[2, 3, 4, 4], &[2, 1, 1]),
    (&[2, 4, 4, 4], &[2, 1, 1]),
    (&[3, 4, 4, 4], &[2, 1, 1]),
];

pub fn builtin_specs() -> Vec<(Vec<usize>, Vec<BigRational>)> {
    BUILTIN_ROWS
        .iter()
        .map(|(h, b)| {
            let s = values_for_blocks(b)
                .expect("built-in pattern")
                .into_iter()
                .map(|x| BigRational::from_integer(x.into()))
                .collect();
            (h.to_vec(), s)
        })
        .collect()
}

/// One row per non-empty line `h ; s`, e.g. `2,3,4,4 ; 1,1,-1,-1`.
/// Text after `#` is ignored.
pub fn parse_spec(text: &str) -> Result<Vec<(Vec<usize>, Vec<BigRational>)>> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: expected `h ; s`, got {raw:?}", k + 1));
        let (h, s) = line.split_once(';').ok_or_else(bad)?;
        let h: Vec<usize> = h
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let s = parse_rationals(s)?;
        rows.push((h, s));
    }
    Ok(rows)
}

fn blocks_of(s: &[BigRational]) -> Vec<usize> {
    let mut seen: Vec<(&BigRational, usize)> = Vec::new();
    for x in s {
        match seen.iter_mut().find(|(v, _)| *v == x) {
            Some((_, c)) => *c += 1,
            None => seen.push((x, 1)),
        }
    }
    let mut b: Vec<usize> = seen.into_iter().map(|(_, c)| c).collect();
    b.sort_unstable_by(|a, b| b.cmp(a));
    b
}

pub fn compute_row(h: &[usize], s_values: &[BigRational]) -> Result<TableRow> {
    let n = s_values.len();
    check_hessenberg_function(n, h)?;
    let wg = type_a_group(n)?;
    let s = make_semisimple(wg.root_system(), s_values.to_vec())?;
    let mut row = TableRow {
        h: h.to_vec(),
        s: s_values.iter().map(|x| x.to_string()).collect(),
        blocks: blocks_of(s_values),
        singular: Cell::OutOfScope,
        irreducible: Cell::OutOfScope,
        equidimensional: Cell::OutOfScope,
        method: String::new(),
    };
    if h.iter().all(|&x| x == n) {
        row.singular = Cell::No;
        row.irreducible = Cell::Yes;
        row.equidimensional = Cell::Yes;
        row.method = "flag-variety".into();
    } else if h == standard_hessenberg_function(n) {
        let report = component_data(&wg, &s)?;
        row.singular = (!report.all_singular.is_empty()).into();
        row.irreducible = report.is_irreducible().into();
        row.equidimensional = report.is_equidimensional().into();
        row.method = "components".into();
    } else {
        // on a radical patch ideal, tangent dimension above the dimension of
        // the whole variety is singular whatever the local dimension;
        // anything else is undecided
        let hs = hessenberg_from_function(wg.root_system(), h)?;
        let group = wg.enumerate()?;
        let dim = group.iter().map(|w| cell_dimension(&wg, w, &s, &hs)).max().unwrap_or(0);
        let scan = singular_scan(s_values, h, LocalDimSource::Unknown, 0)?;
        if scan.points.iter().any(|p| p.radical_certified && p.tangent_dim > dim) {
            row.singular = Cell::Yes;
        }
        row.method = "tangent-scan".into();
    }
    Ok(row)
}

pub fn compute_table(specs: &[(Vec<usize>, Vec<BigRational>)]) -> Result<Vec<TableRow>> {
    specs.iter().map(|(h, s)| compute_row(h, s)).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

pub fn render_text(rows: &[TableRow]) -> String {
    let header = ["Hess. fun.", "Blocks", "S", "Singular", "Irreduc.", "Equidimensional", "Method"];
    let body: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                join(&r.h),
                join(&r.blocks),
                join(&r.s),
                r.singular.to_string(),
                r.irreducible.to_string(),
                r.equidimensional.to_string(),
                r.method.clone(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in &body {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in &body {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}
