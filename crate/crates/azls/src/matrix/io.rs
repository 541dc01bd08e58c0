//! Plain-text matrix format: a `rows cols` header, then one `re im` pair per
//! line in row-major order. Values are written with 17 significant digits.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::C64;

pub fn write_matrix<W: Write>(mut w: W, a: &ComplexMatrix) -> Result<()> {
    writeln!(w, "{} {}", a.rows(), a.cols())?;
    for v in a.data() {
        writeln!(w, "{:.16e} {:.16e}", v.re, v.im)?;
    }
    Ok(())
}

pub fn read_matrix<R: BufRead>(r: R) -> Result<ComplexMatrix> {
    let mut lines = r.lines().enumerate();
    let (rows, cols) = match lines.next() {
        Some((_, line)) => {
            let line = line?;
            let mut it = line.split_whitespace();
            let rows = parse_field::<usize>(it.next(), 1)?;
            let cols = parse_field::<usize>(it.next(), 1)?;
            (rows, cols)
        }
        None => return Err(Error::Parse { line: 1, msg: "missing header".into() }),
    };
    let mut data = Vec::with_capacity(rows * cols);
    for (idx, line) in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let re = parse_field::<f64>(it.next(), idx + 1)?;
        let im = parse_field::<f64>(it.next(), idx + 1)?;
        data.push(C64::new(re, im));
    }
    ComplexMatrix::new(rows, cols, data)
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, line: usize) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::Parse { line, msg: "missing field".into() })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("cannot parse {tok:?}"),
    })
}
