use std::fs;

use ferrers_core::hilbert::is_strongly_stable_shape;
use ferrers_core::shapes::{enumerate_shapes, SkewShape, SweepBounds};

use crate::{CommandKind, RunArgs, VariantArg};

/// Parses `n<=N,m<=M,cells<=C`; every key is required once.
pub fn parse_sweep(text: &str) -> Result<SweepBounds, String> {
    let (mut n, mut m, mut cells) = (None, None, None);
    for part in text.split(',') {
        let (key, value) = part
            .trim()
            .split_once("<=")
            .ok_or_else(|| format!("sweep bound {part:?} is not of the form key<=value"))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("sweep bound {part:?} needs a non-negative integer"))?;
        let slot = match key.trim() {
            "n" => &mut n,
            "m" => &mut m,
            "cells" => &mut cells,
            other => {
                return Err(format!(
                    "unknown sweep key {other:?} (expected n, m, cells)"
                ))
            }
        };
        if slot.replace(value).is_some() {
            return Err(format!("sweep key {:?} given twice", key.trim()));
        }
    }
    match (n, m, cells) {
        (Some(n), Some(m), Some(c)) => Ok(SweepBounds::new(n, m, c)),
        _ => Err("sweep needs all of n<=N, m<=M, cells<=C".into()),
    }
}

fn parse_file(text: &str) -> Result<Vec<SkewShape>, String> {
    let text = text.trim();
    if text.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| format!("shapes file: {e}"));
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| format!("shapes file line {}: {e}", i + 1))
        })
        .collect()
}

/// Whether `reduction` has a diagonal candidate for `shape` without extra
/// generators.
fn has_diagonal_candidate(shape: &SkewShape, variant: VariantArg) -> bool {
    match variant {
        VariantArg::Ferrers => shape.mu().iter().all(|&m| m == 0),
        VariantArg::Specialized => is_strongly_stable_shape(shape),
    }
}

/// The shapes to process, sorted by `(n, λ, μ)` without repeats.
pub fn load_shapes(kind: CommandKind, args: &RunArgs) -> Result<Vec<SkewShape>, String> {
    let mut shapes = if let Some(s) = &args.shape {
        vec![serde_json::from_str::<SkewShape>(s).map_err(|e| format!("--shape: {e}"))?]
    } else if let Some(path) = &args.shapes_file {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        parse_file(&text)?
    } else {
        let bounds_text = args
            .sweep
            .as_deref()
            .expect("clap requires one shape source");
        let mut bounds = parse_sweep(bounds_text)?.canonical();
        let specialized = args.variant == VariantArg::Specialized;
        if specialized && matches!(kind, CommandKind::Hilbert | CommandKind::Reduction) {
            bounds = bounds.symmetric();
        }
        let mut all = enumerate_shapes(&bounds);
        if kind == CommandKind::Reduction && args.extra_gens.is_empty() {
            all.retain(|s| has_diagonal_candidate(s, args.variant));
        }
        all
    };
    shapes.sort_by_key(shape_key);
    shapes.dedup();
    Ok(shapes)
}

pub fn shape_key(s: &SkewShape) -> (usize, Vec<usize>, Vec<usize>) {
    (s.n(), s.lambda().parts().to_vec(), s.mu().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_grammar() {
        let b = parse_sweep("n<=3, m<=5,cells<=10").unwrap();
        assert_eq!((b.max_rows, b.max_cols, b.max_cells), (3, 5, 10));
        assert!(parse_sweep("n<=3,m<=5").is_err());
        assert!(parse_sweep("n<=3,m<=5,cells<=x").is_err());
        assert!(parse_sweep("n<=3,n<=4,m<=5,cells<=1").is_err());
        assert!(parse_sweep("rows<=3,m<=5,cells<=1").is_err());
    }

    #[test]
    fn file_formats() {
        let a = parse_file(r#"[{"lambda":[2,2]},{"lambda":[3],"mu":[1]}]"#).unwrap();
        let b = parse_file("{\"lambda\":[2,2]}\n\n{\"lambda\":[3],\"mu\":[1]}\n").unwrap();
        assert_eq!(a, b);
        assert!(parse_file(r#"[{"lambda":[2,3]}]"#).is_err());
    }
}
