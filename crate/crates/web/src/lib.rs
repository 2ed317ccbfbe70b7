//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function takes the same text inputs as the CLI (function
//! literals, network files) and returns text, SVG or JSON for the page to
//! insert. The plain Rust versions in [`demo`] are what the tests exercise.

mod svg;

use wasm_bindgen::prelude::*;

pub mod demo {
    use std::fmt::Write;

    use boolnet_core::{
        build_graph, classify, decompose, enumerate_cycles, parse_function_literal, parse_network,
        state_graph,
    };

    /// Parses `"2,3"` style variable lists.
    fn parse_fix(text: &str) -> Result<Vec<usize>, String> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| format!("not a variable index: {s:?}")))
            .collect()
    }

    /// Header line for the function, then `"<assignment> <fragment>"` lines.
    pub fn decompose_text(literal: &str, fix: &str) -> Result<String, String> {
        let f = parse_function_literal(literal).map_err(|e| e.to_string())?;
        let table = decompose(&f, &parse_fix(fix)?).map_err(|e| e.to_string())?;
        let mut out = format!("f = {} ({}@{})\n", f, f.decimal(), f.arity());
        let fixed: Vec<String> = table.fixed_set().iter().map(|v| format!("x{v}")).collect();
        writeln!(out, "fixed {}", fixed.join(",")).unwrap();
        for line in table.lines() {
            writeln!(out, "{line}").unwrap();
        }
        Ok(out)
    }

    pub struct NetworkView {
        pub svg: String,
        pub summary: String,
    }

    /// Interaction graph drawing plus matrices, feedback loops and attractors.
    pub fn network_view(text: &str) -> Result<NetworkView, String> {
        let net = parse_network(text).map_err(|e| e.to_string())?;
        let graph = build_graph(&net);
        let mut summary = String::new();
        writeln!(summary, "M+ then M-:\n{}", graph.matrices()).unwrap();
        let cycles = enumerate_cycles(&graph, graph.size());
        writeln!(summary, "feedback loops ({}):", cycles.len()).unwrap();
        for c in cycles.iter().take(200) {
            writeln!(summary, "  {c}").unwrap();
        }
        if cycles.len() > 200 {
            writeln!(summary, "  ...").unwrap();
        }
        if net.size() <= 12 {
            let sts = state_graph(&net).map_err(|e| e.to_string())?;
            writeln!(summary, "\nattractors ({}):", sts.attractors().len()).unwrap();
            for cycle in sts.attractors() {
                let states: Vec<String> = cycle.iter().map(ToString::to_string).collect();
                writeln!(summary, "  {}", states.join(" -> ")).unwrap();
            }
            writeln!(
                summary,
                "max height {}, average height {:.3}",
                sts.max_height(),
                sts.average_height()
            )
            .unwrap();
        }
        Ok(NetworkView {
            svg: super::svg::render(&graph),
            summary,
        })
    }

    pub fn classify_json(literal: &str) -> Result<String, String> {
        let f = parse_function_literal(literal).map_err(|e| e.to_string())?;
        serde_json::to_string(&classify(&f)).map_err(|e| e.to_string())
    }
}

fn js_err(message: String) -> JsError {
    JsError::new(&message)
}

#[wasm_bindgen]
pub fn decompose_fn(literal: &str, fix: &str) -> Result<String, JsError> {
    demo::decompose_text(literal, fix).map_err(js_err)
}

#[wasm_bindgen]
pub fn network_svg(network: &str) -> Result<String, JsError> {
    demo::network_view(network).map(|v| v.svg).map_err(js_err)
}

#[wasm_bindgen]
pub fn network_summary(network: &str) -> Result<String, JsError> {
    demo::network_view(network).map(|v| v.summary).map_err(js_err)
}

#[wasm_bindgen]
pub fn classify_fn(literal: &str) -> Result<String, JsError> {
    demo::classify_json(literal).map_err(js_err)
}
