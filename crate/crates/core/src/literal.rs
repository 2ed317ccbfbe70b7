//! Text forms of functions and networks.
//!
//! Function literals:
//!
//! * `d:21@3` – decimal 21 over 3 variables
//! * `b:00010101` – MSB-first bitstring
//! * `e:3:!x2 & !x3` – expression over 3 variables
//!
//! A network file holds `n=<size>` followed by one literal per node. Blank
//! lines are skipped and `#` starts a comment.

use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::expr::parse_function;
use crate::function::BooleanFunction;
use crate::graph::BooleanNetwork;

pub fn parse_function_literal(text: &str) -> Result<BooleanFunction> {
    let text = text.trim();
    let bad = || Error::Literal(text.to_string());
    if let Some(rest) = text.strip_prefix("d:") {
        let (value, arity) = rest.split_once('@').ok_or_else(bad)?;
        let arity: usize = arity.trim().parse().map_err(|_| bad())?;
        let value = BigUint::from_str(value.trim()).map_err(|_| bad())?;
        BooleanFunction::from_decimal(arity, &value)
    } else if let Some(rest) = text.strip_prefix("b:") {
        BooleanFunction::from_bitstring(rest.trim())
    } else if let Some(rest) = text.strip_prefix("e:") {
        let (arity, expr) = rest.split_once(':').ok_or_else(bad)?;
        let arity: usize = arity.trim().parse().map_err(|_| bad())?;
        parse_function(expr, arity)
    } else {
        Err(bad())
    }
}

/// `d:<decimal>@<arity>` form of a function.
pub fn decimal_literal(f: &BooleanFunction) -> String {
    format!("d:{}@{}", f.decimal(), f.arity())
}

pub fn parse_network(text: &str) -> Result<BooleanNetwork> {
    let mut size: Option<(usize, usize)> = None;
    let mut rules = Vec::new();
    for (number, raw) in text.lines().enumerate() {
        let line_no = number + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::NetworkFile { line: line_no, message };
        match size {
            None => {
                let n = line
                    .strip_prefix("n=")
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .ok_or_else(|| err(format!("expected \"n=<size>\", found {line:?}")))?;
                if n == 0 {
                    return Err(err("network size must be at least 1".into()));
                }
                size = Some((n, line_no));
            }
            Some((n, _)) => {
                if rules.len() == n {
                    return Err(err(format!("more than {n} rules")));
                }
                let rule = parse_function_literal(line).map_err(|e| err(e.to_string()))?;
                if rule.arity() != n {
                    return Err(err(format!(
                        "rule {} has arity {}, expected {n}",
                        rules.len() + 1,
                        rule.arity()
                    )));
                }
                rules.push(rule);
            }
        }
    }
    let (n, header) = size.ok_or(Error::NetworkFile {
        line: 1,
        message: "missing \"n=<size>\" header".into(),
    })?;
    if rules.len() != n {
        return Err(Error::NetworkFile {
            line: header,
            message: format!("expected {n} rules, found {}", rules.len()),
        });
    }
    BooleanNetwork::new(rules)
}

/// Inverse of [`parse_network`] using decimal literals.
pub fn render_network(network: &BooleanNetwork) -> String {
    let mut out = format!("n={}\n", network.size());
    for rule in network.rules() {
        out.push_str(&decimal_literal(rule));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn literal_forms_agree() {
        let d = parse_function_literal("d:17@3").unwrap();
        let b = parse_function_literal("b:00010001").unwrap();
        let e = parse_function_literal("e:3:!x2&!x3").unwrap();
        assert_eq!(d, b);
        assert_eq!(d, e);
        assert_eq!(decimal_literal(&d), "d:17@3");
    }

    #[test]
    fn literal_errors() {
        for bad in ["17@3", "d:17", "d:x@3", "d:256@3", "b:012", "e:3", "e:x:x1", "e:2:x3"] {
            assert!(parse_function_literal(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn network_file_round_trip() {
        let text = "# example\nn=3\nd:168@3\nb:10000000   # AND\n\ne:3:!x2 & !x3\n";
        let net = parse_network(text).unwrap();
        assert_eq!(net.size(), 3);
        assert_eq!(render_network(&net), "n=3\nd:168@3\nd:128@3\nd:17@3\n");
        assert_eq!(parse_network(&render_network(&net)).unwrap(), net);
    }

    #[test]
    fn graph_ignores_input_form() {
        let a = parse_network("n=3\nd:168@3\nd:128@3\nd:17@3").unwrap();
        let b = parse_network("n=3\nb:10101000\ne:3:x1&x2&x3\nb:00010001").unwrap();
        let c = parse_network("n=3\ne:3:x3 & (x1 | x2)\nd:128@3\ne:3:!(x2 | x3)").unwrap();
        assert_eq!(build_graph(&a), build_graph(&b));
        assert_eq!(build_graph(&a), build_graph(&c));
    }

    #[test]
    fn network_file_errors() {
        let line = |text: &str| match parse_network(text) {
            Err(Error::NetworkFile { line, .. }) => line,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("size=3"), 1);
        assert_eq!(line("n=2\nd:1@2\nd:1@3"), 3);
        assert_eq!(line("n=2\nd:1@2\nd:1@2\nd:1@2"), 4);
        assert_eq!(line("# c\nn=2\nd:1@2"), 2);
        assert_eq!(line("n=1\nq:1"), 2);
    }
}
