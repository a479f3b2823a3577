//! The line-oriented text format for closure systems.
//!
//! ```text
//! # comment
//! system preorder
//! elements a b c
//! le c a
//! le c b
//! ```
//!
//! `system moore|preorder|implications|powerset-union` comes first. Moore
//! files list `closed <label>*` lines, preorders `le <a> <b>` (a ≤ b),
//! implication bases `rule <label>+ -> <label>`, and powerset-union files a
//! single `powerset-union <n>` line instead of `elements`.

use std::collections::HashMap;

use crate::closure::{validate_labels, ClosureSystem, Completion, Rule};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::mask::SubsetMask;
use crate::order::QuasiOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    Moore,
    Preorder,
    Implications,
    PowersetUnion,
}

impl SystemKind {
    pub fn keyword(self) -> &'static str {
        match self {
            SystemKind::Moore => "moore",
            SystemKind::Preorder => "preorder",
            SystemKind::Implications => "implications",
            SystemKind::PowersetUnion => "powerset-union",
        }
    }
}

/// A parsed file, with the line number of every entry kept for error
/// reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    pub kind: SystemKind,
    pub elements: Vec<String>,
    pub elements_line: usize,
    pub closed: Vec<(usize, Vec<String>)>,
    pub le: Vec<(usize, String, String)>,
    pub rules: Vec<(usize, Vec<String>, String)>,
    pub powerset_inner: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    pub completion: Completion,
    pub limits: Limits,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_system(text: &str) -> Result<SystemSpec> {
    let mut spec: Option<SystemSpec> = None;
    let mut elements_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        let Some(spec) = spec.as_mut() else {
            if keyword != "system" {
                return Err(parse_error(line, format!("expected `system`, found `{keyword}`")));
            }
            let kind = match args {
                ["moore"] => SystemKind::Moore,
                ["preorder"] => SystemKind::Preorder,
                ["implications"] => SystemKind::Implications,
                ["powerset-union"] => SystemKind::PowersetUnion,
                _ => {
                    return Err(parse_error(
                        line,
                        "expected `system moore|preorder|implications|powerset-union`",
                    ))
                }
            };
            spec = Some(SystemSpec {
                kind,
                elements: Vec::new(),
                elements_line: 0,
                closed: Vec::new(),
                le: Vec::new(),
                rules: Vec::new(),
                powerset_inner: None,
            });
            continue;
        };
        let misplaced = || {
            parse_error(
                line,
                format!("`{keyword}` is not allowed in a {} file", spec.kind.keyword()),
            )
        };
        match keyword {
            "system" => return Err(parse_error(line, "`system` given twice")),
            "elements" => {
                if spec.kind == SystemKind::PowersetUnion {
                    return Err(misplaced());
                }
                if elements_seen {
                    return Err(parse_error(line, "`elements` given twice"));
                }
                elements_seen = true;
                spec.elements = args.iter().map(|s| s.to_string()).collect();
                spec.elements_line = line;
            }
            "closed" => {
                if spec.kind != SystemKind::Moore {
                    return Err(misplaced());
                }
                spec.closed.push((line, args.iter().map(|s| s.to_string()).collect()));
            }
            "le" => {
                if spec.kind != SystemKind::Preorder {
                    return Err(misplaced());
                }
                let [a, b] = args else {
                    return Err(parse_error(line, "expected `le <a> <b>`"));
                };
                spec.le.push((line, a.to_string(), b.to_string()));
            }
            "rule" => {
                if spec.kind != SystemKind::Implications {
                    return Err(misplaced());
                }
                let arrow = args.iter().position(|&t| t == "->");
                let Some(arrow) = arrow.filter(|&p| p > 0 && p + 2 == args.len()) else {
                    return Err(parse_error(line, "expected `rule <label>+ -> <label>`"));
                };
                let premise = args[..arrow].iter().map(|s| s.to_string()).collect();
                spec.rules.push((line, premise, args[arrow + 1].to_string()));
            }
            "powerset-union" => {
                if spec.kind != SystemKind::PowersetUnion {
                    return Err(misplaced());
                }
                if spec.powerset_inner.is_some() {
                    return Err(parse_error(line, "`powerset-union` given twice"));
                }
                let n = match args {
                    [n] => n
                        .parse::<usize>()
                        .map_err(|_| parse_error(line, format!("`{n}` is not a number")))?,
                    _ => return Err(parse_error(line, "expected `powerset-union <n>`")),
                };
                spec.powerset_inner = Some((line, n));
            }
            other => return Err(parse_error(line, format!("unknown keyword `{other}`"))),
        }
    }
    let spec = spec.ok_or_else(|| parse_error(1, "missing `system` line"))?;
    if spec.kind == SystemKind::PowersetUnion && spec.powerset_inner.is_none() {
        return Err(parse_error(
            text.lines().count().max(1),
            "missing `powerset-union <n>` line",
        ));
    }
    if spec.kind != SystemKind::PowersetUnion && !elements_seen {
        return Err(parse_error(text.lines().count().max(1), "missing `elements` line"));
    }
    Ok(spec)
}

pub fn build_system(spec: &SystemSpec, options: &BuildOptions) -> Result<ClosureSystem> {
    let limits = options.limits;
    if spec.kind == SystemKind::PowersetUnion {
        let (line, n) = spec.powerset_inner.expect("checked by the parser");
        return ClosureSystem::powerset_union_with_limits(n, limits).map_err(|e| parse_error(line, e.to_string()));
    }
    let labels = spec.elements.clone();
    validate_labels(&labels).map_err(|e| parse_error(spec.elements_line, e.to_string()))?;
    limits
        .check_ground(labels.len())
        .map_err(|e| parse_error(spec.elements_line, e.to_string()))?;
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let lookup = |line: usize, label: &str| {
        index
            .get(label)
            .copied()
            .ok_or_else(|| parse_error(line, format!("unknown label `{label}`")))
    };
    match spec.kind {
        SystemKind::Moore => {
            let family = spec
                .closed
                .iter()
                .map(|(line, members)| {
                    members
                        .iter()
                        .map(|l| lookup(*line, l))
                        .collect::<Result<Vec<_>>>()
                        .map(SubsetMask::from_elems)
                })
                .collect::<Result<Vec<_>>>()?;
            ClosureSystem::moore_with_limits(labels, family, options.completion, limits)
        }
        SystemKind::Preorder => {
            let pairs = spec
                .le
                .iter()
                .map(|(line, a, b)| Ok((lookup(*line, a)?, lookup(*line, b)?)))
                .collect::<Result<Vec<_>>>()?;
            let order = QuasiOrder::from_pairs(labels.len(), &pairs)?;
            ClosureSystem::alexandroff_with_limits(labels, order, limits)
        }
        SystemKind::Implications => {
            let rules = spec
                .rules
                .iter()
                .map(|(line, premise, conclusion)| {
                    let premise = premise.iter().map(|l| lookup(*line, l)).collect::<Result<Vec<_>>>()?;
                    Ok(Rule {
                        premise: SubsetMask::from_elems(premise),
                        conclusion: lookup(*line, conclusion)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            ClosureSystem::implications_with_limits(labels, rules, limits)
        }
        SystemKind::PowersetUnion => unreachable!(),
    }
}

/// Parses and builds in one step.
pub fn load_system(text: &str, options: &BuildOptions) -> Result<ClosureSystem> {
    build_system(&parse_system(text)?, options)
}
