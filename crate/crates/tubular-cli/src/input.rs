//! Reading algebras, modules, tube vertices and subsets from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::Args;
use serde::Deserialize;
use serde_json::Value;

use tubular::constructions::one_point_extension;
use tubular::fixtures::{a_x11, canonical_333, e6_hereditary, e6_regular_simple, kronecker, kronecker_regular, kronecker_s22};
use tubular::quiver_algebra::{build_algebra, BoundQuiverAlgebra, Quiver, QuiverSpec, Relation, RelationTerm, StructureAlgebra, DEFAULT_CAP};
use tubular::representation::{Representation, RepresentationSpec};
use tubular::tube::TubeVertex;
use tubular::ziegler::{InfinitePoint, ZgPoint};
use tubular::Scalar;

use crate::Failure;

/// Algebras with a name of their own.
pub const ALGEBRA_NAMES: &[&str] = &["kronecker", "kronecker-S22", "canonical-333", "e6", "e6-extension", "a-x11"];

#[derive(Args, Debug, Clone, Default)]
pub struct AlgebraArgs {
    /// Named algebra: kronecker, kronecker-S22, canonical-333, e6, e6-extension, a-x11.
    #[arg(long, conflicts_with = "quiver")]
    pub example: Option<String>,
    /// Quiver file `{vertices, arrows: [{label, src, tgt}]}`.
    #[arg(long)]
    pub quiver: Option<PathBuf>,
    /// Relations file: a list of relations, each a list of `{coef, path}` terms.
    #[arg(long, requires = "quiver")]
    pub relations: Option<PathBuf>,
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::input(format!("{what}: {e}")))
}

/// A JSON literal when the argument starts with `{` or `[`, a file name otherwise.
pub fn json_argument(arg: &str) -> Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(arg.to_string())
    } else {
        read_text(Path::new(arg))
    }
}

pub fn named_algebra(name: &str) -> Result<BoundQuiverAlgebra, Failure> {
    Ok(match name {
        "kronecker" => kronecker(),
        "kronecker-S22" => kronecker_s22(&Scalar::from_int(2))?.algebra,
        "canonical-333" => canonical_333(),
        "e6" => e6_hereditary(),
        "e6-extension" => {
            let e6 = e6_hereditary();
            let x = e6_regular_simple(&e6);
            one_point_extension(&e6, &x)?.algebra
        }
        "a-x11" => a_x11()?.algebra,
        other => return Err(Failure::input(format!("unknown algebra {other:?}; known: {}", ALGEBRA_NAMES.join(", ")))),
    })
}

impl AlgebraArgs {
    pub fn given(&self) -> bool {
        self.example.is_some() || self.quiver.is_some()
    }

    pub fn load(&self) -> Result<BoundQuiverAlgebra, Failure> {
        if let Some(name) = &self.example {
            return named_algebra(name);
        }
        let Some(qpath) = &self.quiver else {
            return Err(Failure::input("no algebra given: use --example or --quiver"));
        };
        let spec: QuiverSpec = parse_json(&read_text(qpath)?, "quiver")?;
        let q = Quiver::from_spec(&spec)?;
        let rels = match &self.relations {
            None => Vec::new(),
            Some(path) => {
                let terms: Vec<Vec<RelationTerm>> = parse_json(&read_text(path)?, "relations")?;
                terms.iter().map(|t| Relation::from_spec(&q, t)).collect::<tubular::Result<Vec<_>>>()?
            }
        };
        Ok(build_algebra(&q, &rels, DEFAULT_CAP)?)
    }

    /// The algebra given on the command line, or else the one named inside a module file.
    pub fn load_for(&self, module_args: &[String]) -> Result<BoundQuiverAlgebra, Failure> {
        if self.given() {
            return self.load();
        }
        for arg in module_args {
            if let Some(text) = module_file_text(arg)? {
                let file: ModuleFile = parse_json(&text, "module")?;
                if let Some(name) = file.algebra {
                    return named_algebra(&name);
                }
            }
        }
        Err(Failure::input("no algebra given: use --example, --quiver, or an \"algebra\" field in the module file"))
    }
}

#[derive(Deserialize)]
struct ModuleFile {
    #[serde(default)]
    algebra: Option<String>,
    #[serde(flatten)]
    spec: RepresentationSpec,
}

fn shorthand(arg: &str) -> Option<(&str, &str)> {
    let (kind, rest) = arg.split_once(':')?;
    matches!(kind, "P" | "I" | "S" | "R" | "X").then_some((kind, rest))
}

fn module_file_text(arg: &str) -> Result<Option<String>, Failure> {
    if shorthand(arg).is_some() || arg == "X" {
        return Ok(None);
    }
    json_argument(arg).map(Some)
}

fn object(a: &StructureAlgebra, label: &str) -> Result<usize, Failure> {
    a.object_index(label).ok_or_else(|| Failure::input(format!("unknown vertex {label:?}")))
}

/// A module: `P:v`, `I:v`, `S:v` (projective, injective, simple at `v`), `R:λ` (regular Kronecker
/// module), `X` (the regular simple E6 module), or a JSON file `{dims, maps}`.
pub fn load_module(bound: Option<&BoundQuiverAlgebra>, a: &Arc<StructureAlgebra>, arg: &str) -> Result<Representation, Failure> {
    if arg == "X" {
        let b = bound.ok_or_else(|| Failure::input("X needs the e6 algebra"))?;
        if b.quiver.num_vertices() != 7 {
            return Err(Failure::input("X needs the e6 algebra"));
        }
        return Ok(e6_regular_simple(b));
    }
    if let Some((kind, rest)) = shorthand(arg) {
        return match kind {
            "P" => Ok(Representation::projective(a.clone(), object(a, rest)?)),
            "I" => Ok(Representation::injective(a.clone(), object(a, rest)?)),
            "S" => Ok(Representation::simple(a.clone(), object(a, rest)?)),
            "R" => {
                let b = bound.filter(|b| b.quiver.num_vertices() == 2 && b.quiver.num_arrows() == 2);
                let b = b.ok_or_else(|| Failure::input("R:λ needs the kronecker algebra"))?;
                let lambda: Scalar = rest.parse().map_err(|_| Failure::input(format!("bad scalar {rest:?}")))?;
                Ok(kronecker_regular(b, &lambda))
            }
            _ => Err(Failure::input(format!("bad module {arg:?}"))),
        };
    }
    let file: ModuleFile = parse_json(&json_argument(arg)?, "module")?;
    Ok(Representation::from_spec(a.clone(), &file.spec)?)
}

pub fn parse_vertex(s: &str) -> Result<TubeVertex, Failure> {
    s.parse().map_err(|_| Failure::input(format!("bad tube vertex {s:?}")))
}

pub fn parse_point(s: &str) -> Result<ZgPoint, Failure> {
    if let Ok(p) = s.parse::<InfinitePoint>() {
        return Ok(ZgPoint::Infinite(p));
    }
    Ok(ZgPoint::Finite(parse_vertex(s)?))
}

/// `lo..hi`, both ends included.
pub fn parse_levels(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::input(format!("bad level range {s:?}; expected lo..hi"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn json_object(text: &str, what: &str) -> Result<serde_json::Map<String, Value>, Failure> {
    match parse_json::<Value>(text, what)? {
        Value::Object(m) => Ok(m),
        _ => Err(Failure::input(format!("{what}: expected a JSON object"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels() {
        assert_eq!(parse_levels("-1..1").unwrap(), (-1, 1));
        assert_eq!(parse_levels("0..=2").unwrap(), (0, 2));
        assert!(parse_levels("2..1").is_err());
        assert!(parse_levels("1").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("generic").unwrap(), ZgPoint::Infinite(InfinitePoint::Generic));
        assert!(matches!(parse_point("Y1[2]").unwrap(), ZgPoint::Finite(_)));
        assert!(parse_point("prufer").is_err());
    }

    #[test]
    fn shorthand_modules() {
        let kr = kronecker();
        let a = kr.structure.clone();
        assert_eq!(load_module(Some(&kr), &a, "P:c2").unwrap().total_dim(), 3);
        assert_eq!(load_module(Some(&kr), &a, "R:3").unwrap().dims(), &[1, 1]);
        assert!(load_module(Some(&kr), &a, "P:zz").is_err());
        assert!(load_module(Some(&kr), &a, "X").is_err());
        let m = load_module(Some(&kr), &a, r#"{"dims": {"c1": 1}, "maps": {}}"#).unwrap();
        assert_eq!(m.total_dim(), 1);
    }
}
