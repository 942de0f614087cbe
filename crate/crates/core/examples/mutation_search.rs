//! Tries every single-leaf mutation of each fixture and lists, per law,
//! the mutations whose failure report names that law alone.
//!
//! `cargo run --release --example mutation_search [filter]`

#[path = "../tests/common/mod.rs"]
mod common;

use std::collections::{BTreeMap, BTreeSet};

use encat::interface::{check_document, parse, serialize};
use serde_json::Value;

fn leaves(v: &Value, path: String, out: &mut Vec<(String, String)>) {
    match v {
        Value::String(s) => out.push((path, s.clone())),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| leaves(x, format!("{path}/{i}"), out)),
        Value::Object(m) => m.iter().for_each(|(k, x)| leaves(x, format!("{path}/{k}"), out)),
        _ => {}
    }
}

fn main() {
    std::panic::set_hook(Box::new(|_| {}));
    let filter = std::env::args().nth(1).unwrap_or_default();
    let mut found: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (label, doc) in common::fixtures() {
        if !label.contains(&filter) {
            continue;
        }
        let base: Value = serde_json::from_str(&serialize(&doc)).unwrap();
        let mut ls = Vec::new();
        leaves(&base["body"], "/body".into(), &mut ls);
        let ids: BTreeSet<String> = ls.iter().map(|(_, s)| s.clone()).collect();
        let t = std::time::Instant::now();
        let mut tried = 0;
        for (p, old) in &ls {
            for new in &ids {
                if new == old {
                    continue;
                }
                let mut m = base.clone();
                *m.pointer_mut(p).unwrap() = Value::String(new.clone());
                let Ok(d) = parse(&m.to_string()) else { continue };
                tried += 1;
                let Ok(res) = std::panic::catch_unwind(|| check_document(&d)) else {
                    println!("PANIC {label}: {p} {old} -> {new}");
                    continue;
                };
                let Ok(r) = res else { continue };
                let laws: BTreeSet<&str> = r.iter().map(|c| c.law.as_str()).collect();
                if let Ok(pat) = std::env::var("SETS") {
                    if p.contains(&pat) {
                        println!("SET {label}: {p} {old} -> {new}: {laws:?}");
                    }
                }
                if laws.len() == 1 {
                    let law = laws.into_iter().next().unwrap().to_string();
                    let e = found.entry(law).or_default();
                    if e.len() < 400 {
                        let key = p.strip_suffix("/1").and_then(|q| base.pointer(&format!("{q}/0"))).map(|k| k.to_string()).unwrap_or_default();
                        e.push(format!("{label}: {p} {key} {old} -> {new}"));
                    }
                }
            }
        }
        eprintln!("{label}: {tried} mutations in {:?}", t.elapsed());
    }
    for (law, ms) in &found {
        let reg = encat::LAW_REGISTRY.contains(&law.as_str());
        println!("== {law}{} ({} found)", if reg { " [registry]" } else { "" }, ms.len());
        for m in ms.iter().filter(|m| std::env::var("ALL").is_ok() || !m.contains("baseV")).take(40) {
            println!("   {m}");
        }
    }
}
