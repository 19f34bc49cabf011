//! Plain-text problem files.
//!
//! ```text
//! # comment
//! n m
//! obj T
//! e_1 … e_n coeff      (T term lines)
//! con T_1
//! …                    (m constraint blocks)
//! ```

use std::fmt::Write as _;
use std::path::Path;

use bsos_core::{Polynomial, SemialgebraicProblem, Term};

use crate::Error;

pub fn parse_problem(name: &str, text: &str) -> Result<SemialgebraicProblem, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, message: &str| Error::Format {
        line,
        message: message.to_string(),
    };

    let (ln, header) = lines.next().ok_or_else(|| bad(0, "missing header `n m`"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = head.as_slice() else {
        return Err(bad(ln, "header must be `n m`"));
    };
    let n: usize = n.parse().map_err(|_| bad(ln, "n is not an integer"))?;
    let m: usize = m.parse().map_err(|_| bad(ln, "m is not an integer"))?;

    let mut read_block = |keyword: &str| -> Result<Polynomial, Error> {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| bad(0, &format!("missing `{keyword} T` line")))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 || parts[0] != keyword {
            return Err(bad(ln, &format!("expected `{keyword} T`")));
        }
        let count: usize = parts[1]
            .parse()
            .map_err(|_| bad(ln, "term count is not an integer"))?;
        let mut terms = Vec::with_capacity(count);
        for _ in 0..count {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| bad(0, "unexpected end of file inside a term block"))?;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != n + 1 {
                return Err(bad(
                    ln,
                    &format!("term line needs {n} exponents and a coefficient"),
                ));
            }
            let exponents = fields[..n]
                .iter()
                .map(|f| f.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad(ln, "exponent is not a nonnegative integer"))?;
            let coeff: f64 = fields[n]
                .parse()
                .map_err(|_| bad(ln, "coefficient is not a real number"))?;
            terms.push(Term::new(exponents, coeff));
        }
        Ok(Polynomial::new(n, terms)?)
    };

    let objective = read_block("obj")?;
    let generators = (0..m)
        .map(|_| read_block("con"))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some((ln, _)) = lines.next() {
        return Err(bad(ln, "trailing content after the last constraint block"));
    }
    Ok(SemialgebraicProblem::new(name, objective, generators)?)
}

pub fn format_problem(problem: &SemialgebraicProblem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", problem.name);
    let _ = writeln!(out, "{} {}", problem.num_vars(), problem.num_generators());
    let mut block = |keyword: &str, p: &Polynomial| {
        let _ = writeln!(out, "{keyword} {}", p.terms().len());
        for t in p.terms() {
            for e in &t.exponents {
                let _ = write!(out, "{e} ");
            }
            let _ = writeln!(out, "{:?}", t.coeff);
        }
    };
    block("obj", problem.objective());
    for g in problem.generators() {
        block("con", g);
    }
    out
}

pub fn read_problem_file(path: &Path) -> Result<SemialgebraicProblem, Error> {
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("problem");
    parse_problem(name, &text)
}

pub fn write_problem_file(path: &Path, problem: &SemialgebraicProblem) -> Result<(), Error> {
    Ok(std::fs::write(path, format_problem(problem))?)
}
