//! The rep-spec file format: a line-oriented description of a field, a
//! group, and a representation, with `[section]` headers and `key = value`
//! lines. Parsing is anchored to line numbers; emission is canonical, so a
//! parsed spec re-emits byte for byte.
//!
//! ```text
//! # free-form comments
//! [meta]
//! label = s3-regular-char2
//!
//! [field]
//! p = 2
//! root_orders = 3
//!
//! [group]
//! points = 3
//! permutations = (1 2); (1 2 3)
//!
//! [representation]
//! kind = regular
//! ```
//!
//! Groups come either from `permutations` (cycle notation, points `1..n`)
//! or from `matrices` (bracketed rows, entries in the `z`-expression
//! grammar). Representations are `regular`, `tautological` (matrix groups
//! only), or `images` with one matrix per group generator.

use crate::gf::{parse_element, Field};
use crate::group::{cycle_notation, Group};
use crate::linalg::Matrix;
use crate::rep::{group_from_matrices, Representation};
use crate::{Error, Limits, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Parsed rep-spec file, structure only; `realize` builds the objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    pub label: String,
    pub family: Option<String>,
    pub field: FieldBlock,
    pub group: GroupBlock,
    pub representation: RepBlock,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldBlock {
    /// `p` plus requested root-of-unity orders; degree is derived.
    RootOrders { p: u32, root_orders: Vec<u32> },
    /// Explicit modulus, low-to-high coefficients.
    Explicit { p: u32, modulus: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupBlock {
    /// 0-based images; `points` is the ground set size.
    Permutations { points: usize, gens: Vec<Vec<usize>> },
    /// Matrix entries as `z`-expression strings, row major.
    Matrices { gens: Vec<Vec<Vec<String>>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepBlock {
    Regular,
    Tautological,
    Images(Vec<Vec<Vec<String>>>),
}

struct Section {
    entries: BTreeMap<String, (usize, String)>,
}

impl Section {
    fn get(&self, key: &str) -> Option<&(usize, String)> {
        self.entries.get(key)
    }

    fn require(&self, key: &str, header_line: usize) -> Result<&(usize, String)> {
        self.get(key).ok_or(Error::Parse {
            line: header_line,
            msg: format!("missing key `{key}`"),
        })
    }
}

/// Parses rep-spec text into its structural form.
pub fn parse_repspec(text: &str) -> Result<RepSpec> {
    let mut sections: BTreeMap<String, (usize, Section)> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name.strip_suffix(']').ok_or(Error::Parse {
                line: lineno,
                msg: "unterminated section header".into(),
            })?;
            if sections.contains_key(name) {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("duplicate section [{name}]"),
                });
            }
            sections.insert(
                name.to_string(),
                (
                    lineno,
                    Section {
                        entries: BTreeMap::new(),
                    },
                ),
            );
            current = Some(name.to_string());
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected `key = value`".into(),
            });
        };
        let Some(section) = current.as_ref() else {
            return Err(Error::Parse {
                line: lineno,
                msg: "key outside any section".into(),
            });
        };
        let sec = &mut sections.get_mut(section).unwrap().1;
        let key = key.trim().to_string();
        if key.contains('=') || value.contains('=') {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected a single `key = value`".into(),
            });
        }
        if sec.entries.contains_key(&key) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate key `{key}`"),
            });
        }
        sec.entries.insert(key, (lineno, value.trim().to_string()));
    }

    let take = |name: &str| -> Result<&(usize, Section)> {
        sections.get(name).ok_or(Error::Parse {
            line: 1,
            msg: format!("missing section [{name}]"),
        })
    };

    // [meta]
    let label = match sections.get("meta") {
        Some((_, sec)) => sec
            .get("label")
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| "unnamed".to_string()),
        None => "unnamed".to_string(),
    };
    let family = sections
        .get("meta")
        .and_then(|(_, sec)| sec.get("family").map(|(_, v)| v.clone()));

    // [field]
    let (field_line, field_sec) = take("field")?;
    let (pl, pv) = field_sec.require("p", *field_line)?;
    let p: u32 = pv.parse().map_err(|_| Error::Parse {
        line: *pl,
        msg: format!("bad prime `{pv}`"),
    })?;
    let field = if let Some((ml, mv)) = field_sec.get("modulus") {
        let modulus = parse_u32_list(mv, *ml)?;
        FieldBlock::Explicit { p, modulus }
    } else {
        let root_orders = match field_sec.get("root_orders") {
            Some((rl, rv)) => parse_u32_list(rv, *rl)?,
            None => Vec::new(),
        };
        FieldBlock::RootOrders { p, root_orders }
    };

    // [group]
    let (group_line, group_sec) = take("group")?;
    let group = if let Some((gl, gv)) = group_sec.get("permutations") {
        let explicit_points = match group_sec.get("points") {
            Some((pl2, pv2)) => Some(pv2.parse::<usize>().map_err(|_| Error::Parse {
                line: *pl2,
                msg: format!("bad point count `{pv2}`"),
            })?),
            None => None,
        };
        let (points, gens) = parse_permutations(gv, *gl, explicit_points)?;
        GroupBlock::Permutations { points, gens }
    } else if let Some((ml, mv)) = group_sec.get("matrices") {
        GroupBlock::Matrices {
            gens: parse_matrix_list(mv, *ml)?,
        }
    } else {
        return Err(Error::Parse {
            line: *group_line,
            msg: "group needs `permutations` or `matrices`".into(),
        });
    };

    // [representation]
    let (rep_line, rep_sec) = take("representation")?;
    let (kl, kv) = rep_sec.require("kind", *rep_line)?;
    let representation = match kv.as_str() {
        "regular" => RepBlock::Regular,
        "tautological" => RepBlock::Tautological,
        "images" => {
            let (il, iv) = rep_sec.require("images", *rep_line)?;
            RepBlock::Images(parse_matrix_list(iv, *il)?)
        }
        other => {
            return Err(Error::Parse {
                line: *kl,
                msg: format!("unknown representation kind `{other}`"),
            })
        }
    };

    Ok(RepSpec {
        label,
        family,
        field,
        group,
        representation,
    })
}

fn parse_u32_list(s: &str, line: usize) -> Result<Vec<u32>> {
    s.split(',')
        .map(|part| {
            part.trim().parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad integer `{}`", part.trim()),
            })
        })
        .collect()
}

/// Parses a semicolon-separated list of permutations in cycle notation,
/// e.g. `(1 2)(3 4); (1 2 3)`. Points are 1-based in the text and 0-based
/// in the output; the ground set is the largest point mentioned.
pub fn parse_permutation_list(s: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    parse_permutations(s, 0, None)
}

/// `(1 2)(3 4); (1 2 3)` with 1-based points; rightmost cycle acts first.
fn parse_permutations(
    s: &str,
    line: usize,
    explicit_points: Option<usize>,
) -> Result<(usize, Vec<Vec<usize>>)> {
    let gen_strs: Vec<&str> = s.split(';').map(|g| g.trim()).collect();
    let mut all_cycles: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    for gs in &gen_strs {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = *gs;
        while !rest.trim().is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `(` in `{gs}`"),
                });
            };
            let Some(close) = rest[open..].find(')') else {
                return Err(Error::Parse {
                    line,
                    msg: format!("unterminated cycle in `{gs}`"),
                });
            };
            let inner = &rest[open + 1..open + close];
            let cycle: Vec<usize> = inner
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad point `{t}`"),
                    })
                })
                .collect::<Result<_>>()?;
            for &pt in &cycle {
                if pt == 0 {
                    return Err(Error::Parse {
                        line,
                        msg: "points are 1-based".into(),
                    });
                }
                max_point = max_point.max(pt);
            }
            cycles.push(cycle);
            rest = &rest[open + close + 1..];
        }
        all_cycles.push(cycles);
    }
    let points = explicit_points.unwrap_or(max_point.max(1));
    if max_point > points {
        return Err(Error::Parse {
            line,
            msg: format!("point {max_point} exceeds declared points = {points}"),
        });
    }
    let mut gens = Vec::with_capacity(all_cycles.len());
    for cycles in all_cycles {
        let mut perm: Vec<usize> = (0..points).collect();
        for cycle in cycles.iter().rev() {
            let mut next: Vec<usize> = (0..points).collect();
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                next[from] = to;
            }
            perm = perm.iter().map(|&i| next[i]).collect();
        }
        gens.push(perm);
    }
    Ok((points, gens))
}

/// `[[a,b],[c,d]]; [[...]]` with entries in the `z`-expression grammar.
fn parse_matrix_list(s: &str, line: usize) -> Result<Vec<Vec<Vec<String>>>> {
    s.split(';')
        .map(|ms| parse_matrix(ms.trim(), line))
        .collect()
}

fn parse_matrix(s: &str, line: usize) -> Result<Vec<Vec<String>>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or(Error::Parse {
            line,
            msg: format!("matrix must be bracketed: `{s}`"),
        })?;
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth > 1 {
                    return Err(Error::Parse {
                        line,
                        msg: "nested brackets inside a row".into(),
                    });
                }
                cur.clear();
            }
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse {
                        line,
                        msg: "unbalanced brackets".into(),
                    });
                }
                let row: Vec<String> = cur
                    .split(',')
                    .map(|e| e.trim().to_string())
                    .filter(|e| !e.is_empty())
                    .collect();
                if row.is_empty() {
                    return Err(Error::Parse {
                        line,
                        msg: "empty matrix row".into(),
                    });
                }
                rows.push(row);
            }
            ',' if depth == 0 => {}
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse {
            line,
            msg: "unbalanced brackets".into(),
        });
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line,
            msg: "empty matrix".into(),
        });
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err(Error::Parse {
            line,
            msg: "ragged matrix rows".into(),
        });
    }
    Ok(rows)
}

impl RepSpec {
    /// Builds the field, group and representation described by the spec.
    pub fn realize(&self, limits: &Limits) -> Result<(Field, Arc<Group>, Representation)> {
        let field = match &self.field {
            FieldBlock::RootOrders { p, root_orders } => Field::with_root_orders(*p, root_orders)?,
            FieldBlock::Explicit { p, modulus } => Field::with_modulus(*p, modulus.clone())?,
        };
        match &self.group {
            GroupBlock::Permutations { points, gens } => {
                let padded: Vec<Vec<usize>> = gens
                    .iter()
                    .map(|g| {
                        let mut g = g.clone();
                        while g.len() < *points {
                            let i = g.len();
                            g.push(i);
                        }
                        g
                    })
                    .collect();
                let group = Arc::new(Group::from_permutations(&padded, limits.group_order)?);
                let rep = match &self.representation {
                    RepBlock::Regular => {
                        Representation::regular(Arc::clone(&group), field.clone(), limits)?
                    }
                    RepBlock::Tautological => {
                        return Err(Error::Precondition(
                            "tautological representation needs a matrix group".into(),
                        ))
                    }
                    RepBlock::Images(mats) => {
                        let images = mats
                            .iter()
                            .map(|m| matrix_from_strings(m, &field))
                            .collect::<Result<Vec<_>>>()?;
                        Representation::from_generator_images(
                            Arc::clone(&group),
                            field.clone(),
                            images,
                        )?
                    }
                };
                Ok((field, group, rep))
            }
            GroupBlock::Matrices { gens } => {
                let mats = gens
                    .iter()
                    .map(|m| matrix_from_strings(m, &field))
                    .collect::<Result<Vec<_>>>()?;
                let (group, taut) = group_from_matrices(mats, field.clone(), limits)?;
                let rep = match &self.representation {
                    RepBlock::Tautological => taut,
                    RepBlock::Regular => {
                        Representation::regular(Arc::clone(&group), field.clone(), limits)?
                    }
                    RepBlock::Images(mats) => {
                        let images = mats
                            .iter()
                            .map(|m| matrix_from_strings(m, &field))
                            .collect::<Result<Vec<_>>>()?;
                        Representation::from_generator_images(
                            Arc::clone(&group),
                            field.clone(),
                            images,
                        )?
                    }
                };
                Ok((field, group, rep))
            }
        }
    }

    /// Canonical text form. `parse_repspec(emit(spec)) == spec` and the
    /// composition `emit . parse` is idempotent on its image.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str("[meta]\n");
        out.push_str(&format!("label = {}\n", self.label));
        if let Some(f) = &self.family {
            out.push_str(&format!("family = {f}\n"));
        }
        out.push_str("\n[field]\n");
        match &self.field {
            FieldBlock::RootOrders { p, root_orders } => {
                out.push_str(&format!("p = {p}\n"));
                if !root_orders.is_empty() {
                    out.push_str(&format!("root_orders = {}\n", join_u32(root_orders)));
                }
            }
            FieldBlock::Explicit { p, modulus } => {
                out.push_str(&format!("p = {p}\n"));
                out.push_str(&format!("modulus = {}\n", join_u32(modulus)));
            }
        }
        out.push_str("\n[group]\n");
        match &self.group {
            GroupBlock::Permutations { points, gens } => {
                out.push_str(&format!("points = {points}\n"));
                let rendered: Vec<String> = gens
                    .iter()
                    .map(|g| {
                        let as_u16: Vec<u16> = g.iter().map(|&i| i as u16).collect();
                        cycle_notation(&as_u16)
                    })
                    .collect();
                out.push_str(&format!("permutations = {}\n", rendered.join("; ")));
            }
            GroupBlock::Matrices { gens } => {
                let rendered: Vec<String> = gens.iter().map(|m| render_matrix(m)).collect();
                out.push_str(&format!("matrices = {}\n", rendered.join("; ")));
            }
        }
        out.push_str("\n[representation]\n");
        match &self.representation {
            RepBlock::Regular => out.push_str("kind = regular\n"),
            RepBlock::Tautological => out.push_str("kind = tautological\n"),
            RepBlock::Images(mats) => {
                out.push_str("kind = images\n");
                let rendered: Vec<String> = mats.iter().map(|m| render_matrix(m)).collect();
                out.push_str(&format!("images = {}\n", rendered.join("; ")));
            }
        }
        out
    }
}

fn join_u32(v: &[u32]) -> String {
    v.iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn render_matrix(m: &[Vec<String>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn matrix_from_strings(rows: &[Vec<String>], field: &Field) -> Result<Matrix> {
    let data = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| parse_element(field, e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(data)
}

/// Builds a spec around an existing representation, serializing the group
/// as permutations (its construction form) and the generator images.
pub fn spec_from_representation(
    label: &str,
    family: Option<&str>,
    field_block: FieldBlock,
    rep: &Representation,
) -> Result<RepSpec> {
    let group = rep.group();
    let Some(perms) = group.generator_permutations() else {
        return Err(Error::Precondition(
            "only permutation-constructed groups can be serialized".into(),
        ));
    };
    let points = perms.first().map(|p| p.len()).unwrap_or(1);
    let gens: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| p.iter().map(|&i| i as usize).collect())
        .collect();
    let images: Vec<Vec<Vec<String>>> = group
        .generators()
        .iter()
        .map(|&g| {
            let m = rep.matrix(g as usize);
            (0..m.rows())
                .map(|i| m.row(i).iter().map(|e| e.to_expr()).collect())
                .collect()
        })
        .collect();
    Ok(RepSpec {
        label: label.to_string(),
        family: family.map(|s| s.to_string()),
        field: field_block,
        group: GroupBlock::Permutations { points, gens },
        representation: RepBlock::Images(images),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3_REGULAR: &str = "\
# regular module of S3 over F_2
[meta]
label = s3-regular-char2

[field]
p = 2

[group]
points = 3
permutations = (1 2); (1 2 3)

[representation]
kind = regular
";

    #[test]
    fn parse_and_realize_regular() {
        let spec = parse_repspec(S3_REGULAR).unwrap();
        assert_eq!(spec.label, "s3-regular-char2");
        let (field, group, rep) = spec.realize(&Limits::default()).unwrap();
        assert_eq!(field.characteristic(), 2);
        assert_eq!(group.order(), 6);
        assert_eq!(rep.dim(), 6);
    }

    #[test]
    fn parse_matrix_group() {
        let text = "\
[meta]
label = a4-paper

[field]
p = 3

[group]
matrices = [[0,0,1],[1,0,0],[0,1,0]]; [[2,0,0],[0,2,0],[0,0,1]]

[representation]
kind = tautological
";
        let spec = parse_repspec(text).unwrap();
        let (_, group, rep) = spec.realize(&Limits::default()).unwrap();
        assert_eq!(group.order(), 12);
        assert_eq!(rep.dim(), 3);
    }

    #[test]
    fn emit_parse_round_trip() {
        let spec = parse_repspec(S3_REGULAR).unwrap();
        let emitted = spec.emit();
        let reparsed = parse_repspec(&emitted).unwrap();
        assert_eq!(spec, reparsed);
        assert_eq!(reparsed.emit(), emitted);
    }

    #[test]
    fn images_round_trip_through_field_elements() {
        let text = "\
[meta]
label = z3-scalar

[field]
p = 2
root_orders = 3

[group]
points = 3
permutations = (1 2 3)

[representation]
kind = images
images = [[z]]
";
        let spec = parse_repspec(text).unwrap();
        let (field, group, rep) = spec.realize(&Limits::default()).unwrap();
        assert_eq!(field.degree(), 2);
        assert_eq!(group.order(), 3);
        assert_eq!(rep.dim(), 1);
        let reparsed = parse_repspec(&spec.emit()).unwrap();
        assert_eq!(spec, reparsed);
    }

    #[test]
    fn wrong_order_image_is_a_homomorphism_error() {
        // the 3-cycle cannot act through a scalar of order 2
        let text = "\
[meta]
label = broken

[field]
p = 3

[group]
points = 3
permutations = (1 2 3)

[representation]
kind = images
images = [[2]]
";
        let spec = parse_repspec(text).unwrap();
        assert!(matches!(
            spec.realize(&Limits::default()),
            Err(Error::NotAHomomorphism(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let bad = "[meta\nlabel = x\n";
        match parse_repspec(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad = "[field]\np = 2\n[group]\npermutations = (1 2\n[representation]\nkind = regular\n";
        match parse_repspec(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn spec_from_family_constructor() {
        let lim = Limits::default();
        let v = crate::rep::zqzd_summand(3, 2, 2, 1, &lim).unwrap();
        let spec = spec_from_representation(
            "zqzd-3-2-1",
            Some("zq-rtimes-zd"),
            FieldBlock::RootOrders {
                p: 2,
                root_orders: vec![3],
            },
            &v,
        )
        .unwrap();
        let (field, group, rep) = spec.realize(&lim).unwrap();
        assert_eq!(field.order(), 4);
        assert_eq!(group.order(), 6);
        assert_eq!(rep.dim(), 2);
        // byte-for-byte stable
        let emitted = spec.emit();
        assert_eq!(parse_repspec(&emitted).unwrap().emit(), emitted);
    }
}
