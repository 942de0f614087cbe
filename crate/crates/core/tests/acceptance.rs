//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use encat::equiv::{module_to_cylinder, roundtrip_cylinder_module, roundtrip_cylinder_tensored, roundtrip_module_cylinder};
use encat::instances::Instance;
use encat::interface::{check_document, construct, instance, parse, serialize, Document, Op};
use encat::monoidal::{check_closed, check_monoidal, check_symmetry, self_cylinder, self_vstructure};
use encat::vcat::{associated_vcategory, canonical_rename, underlying_category};
use encat::vmodule::{bimodule_completion, check_closed_bimodule, check_closed_module, enriched_action, module_phibar, ClosedVModuleData};
use encat::vstruct::{cylinder_unique_iso, induced_tensor_bifunctor};
use encat::{CheckReport, LAW_REGISTRY};
use serde_json::{json, Value};

type Outcome = Result<(), String>;

const LIMIT: Duration = Duration::from_secs(10);

const COHERENCE: &[&str] = &["BOOL", "TROP3", "TROP4", "CYC1", "CYC2", "CYC3"];
const ALL: &[&str] = &["BOOL", "TROP3", "TROP4", "CYC1", "CYC2", "CYC3", "GR23", "GR32", "BOOLxCYC3"];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(ctx: &str) -> impl FnOnce(E) -> String + '_ {
    move |err| format!("{ctx}: {err}")
}

fn coherence() -> Outcome {
    for &n in COHERENCE {
        let i = v(n);
        let mut reps = check_monoidal(&i.monoidal).map_err(e(n))?;
        reps.extend(check_symmetry(&i.monoidal, &i.symmetry).map_err(e(n))?);
        reps.extend(check_closed(&i.monoidal, &i.closed).map_err(e(n))?);
        ensure(reps.is_empty(), || format!("{n}: {reps:?}"))?;
    }
    Ok(())
}

fn modules() -> Vec<(String, ClosedVModuleData, Instance)> {
    let mut out = vec![("POSET".to_string(), encat::instances::poset_diamond(), v("BOOL"))];
    for &n in ALL {
        let i = v(n);
        out.push((format!("self {n}"), encat::instances::module_self(&i).unwrap(), i));
    }
    out
}

fn derived_oracles() -> Outcome {
    // every checker below raises EngineBug when a derived identity fails
    for &n in ALL {
        let i = v(n);
        check_monoidal(&i.monoidal).map_err(e(n))?;
        check_symmetry(&i.monoidal, &i.symmetry).map_err(e(n))?;
        check_closed(&i.monoidal, &i.closed).map_err(e(n))?;
    }
    for (n, cm, i) in modules() {
        let reps = check_closed_module(&cm).map_err(e(&n))?;
        ensure(reps.is_empty(), || format!("{n}: {reps:?}"))?;
        let tc = &cm.tensor_closed;
        enriched_action(tc, &i.closed).map_err(e(&n))?;
        for k in tc.module.base_v.objects() {
            for x in tc.module.objects() {
                for y in tc.module.objects() {
                    module_phibar(tc, &i.closed, k, x, y).map_err(e(&n))?;
                }
            }
        }
    }
    Ok(())
}

fn vcat_roundtrip() -> Outcome {
    for n in ["BOOL", "TROP3", "CYC3"] {
        let i = v(n);
        let vs = self_vstructure(&i.monoidal, &i.closed).map_err(e(n))?;
        let vc = associated_vcategory(&vs).map_err(e(n))?;
        let (_, back) = underlying_category(&vc).map_err(e(n))?;
        ensure(back == canonical_rename(&vs).map_err(e(n))?, || format!("{n}: underlying∘associated"))?;
        let again = associated_vcategory(&back).map_err(e(n))?;
        ensure(again == vc, || format!("{n}: associated∘underlying"))?;
    }
    Ok(())
}

fn tensored_roundtrip() -> Outcome {
    for &n in ALL {
        let i = v(n);
        let vs = self_vstructure(&i.monoidal, &i.closed).map_err(e(n))?;
        let cyl = self_cylinder(&i.monoidal, &i.closed).map_err(e(n))?;
        ensure(roundtrip_cylinder_tensored(&vs, &i.closed, &cyl).map_err(e(n))?, || n.to_string())?;
    }
    Ok(())
}

fn module_cylinder_inputs() -> Vec<(String, ClosedVModuleData, Instance)> {
    modules().into_iter().filter(|(n, _, _)| ["POSET", "self TROP3", "self CYC3"].contains(&n.as_str())).collect()
}

fn module_cylinder() -> Outcome {
    for (n, cm, i) in module_cylinder_inputs() {
        let tc = &cm.tensor_closed;
        ensure(roundtrip_module_cylinder(tc, &i.closed).map_err(e(&n))?, || format!("{n}: module→cylinder→module"))?;
        let (vs, cyl) = module_to_cylinder(tc, &i.closed).map_err(e(&n))?;
        ensure(roundtrip_cylinder_module(&vs, &i.closed, &cyl).map_err(e(&n))?, || format!("{n}: cylinder→module→cylinder"))?;
    }
    Ok(())
}

fn completion() -> Outcome {
    for (n, cm, i) in modules().into_iter().filter(|(n, _, _)| n == "POSET" || n == "self TROP3") {
        let cb = bimodule_completion(&cm, &i.symmetry).map_err(e(&n))?;
        let reps = check_closed_bimodule(&cb, &i.closed, &i.symmetry).map_err(e(&n))?;
        ensure(reps.is_empty(), || format!("{n}: {reps:?}"))?;
        // count, independently of the construction, the candidates that keep the bimodule valid
        let s = &cm.tensor_closed.module.base_s;
        let passing = |cand: &encat::vmodule::ClosedBimoduleData| -> Result<bool, String> {
            Ok(check_closed_bimodule(cand, &i.closed, &i.symmetry).map_err(e(&n))?.is_empty())
        };
        for (key, val) in &cb.assoc_op {
            let mut count = 0;
            for c in s.hom(s.src(val).unwrap(), s.dst(val).unwrap()) {
                let mut cand = cb.clone();
                cand.assoc_op.insert(key.clone(), c.to_string());
                count += passing(&cand)? as usize;
            }
            ensure(count == 1, || format!("{n}: a^op at {key:?} has {count} witnesses"))?;
        }
        for (key, val) in &cb.lunit_op {
            let mut count = 0;
            for c in s.hom(s.src(val).unwrap(), s.dst(val).unwrap()) {
                let mut cand = cb.clone();
                cand.lunit_op.insert(key.clone(), c.to_string());
                count += passing(&cand)? as usize;
            }
            ensure(count == 1, || format!("{n}: l^op at {key} has {count} witnesses"))?;
        }
        let again = bimodule_completion(&cb.closed_module, &i.symmetry).map_err(e(&n))?;
        ensure(again == cb, || format!("{n}: completion not idempotent"))?;
    }
    Ok(())
}

fn uniqueness() -> Outcome {
    let mut cases = Vec::new();
    for &n in ALL {
        let i = v(n);
        let vs = self_vstructure(&i.monoidal, &i.closed).map_err(e(n))?;
        let cyl = self_cylinder(&i.monoidal, &i.closed).map_err(e(n))?;
        cases.push((format!("self {n}"), vs, cyl, i.closed));
    }
    for (n, cm, i) in modules() {
        let (vs, cyl) = module_to_cylinder(&cm.tensor_closed, &i.closed).map_err(e(&n))?;
        cases.push((format!("module {n}"), vs, cyl, i.closed));
    }
    for (n, vs, cyl, cl) in &cases {
        for k in vs.base_v.objects() {
            for x in vs.objects() {
                let f = cylinder_unique_iso(vs, cl, cyl, cyl, k, x).map_err(e(n))?;
                ensure(vs.base_s.is_identity(&f), || format!("{n}: self-comparison at ({k},{x}) is {f}"))?;
            }
        }
        induced_tensor_bifunctor(vs, cl, cyl).map_err(e(n))?;
    }
    Ok(())
}

/// Replaces the value stored under `key` in the entry table at `table`.
fn mutate(doc: &Document, table: &str, key: Value, new: &str) -> Document {
    let mut j: Value = serde_json::from_str(&serialize(doc)).unwrap();
    let rows = j.pointer_mut(table).and_then(Value::as_array_mut).unwrap_or_else(|| panic!("no table {table}"));
    let row = rows.iter_mut().find(|r| r[0] == key).unwrap_or_else(|| panic!("no key {key} in {table}"));
    row[1] = Value::String(new.into());
    parse(&j.to_string()).unwrap()
}

struct Mutation {
    law: &'static str,
    doc: Document,
    table: &'static str,
    key: Value,
    new: &'static str,
}

fn mutations() -> Vec<Mutation> {
    let (pm, ps) = pq_monoidal();
    let pq = Document::Monoidal(encat::interface::MonoidalDoc { monoidal: pm, symmetry: Some(ps), closed: None });
    let m = |law, doc, table, key, new| Mutation { law, doc, table, key, new };
    vec![
        m("pentagon", monoidal_doc(&v("GR23"), false, false), "/body/monoidal/assoc", json!(["0", "1", "0"]), "1:1"),
        m("triangle", monoidal_doc(&v("GR23"), false, false), "/body/monoidal/lunit", json!("1"), "1:1"),
        m("symmetry.invol", pq, "/body/symmetry/braid", json!(["p", "q"]), "z:1"),
        m("symmetry.hexagon", monoidal_doc(&v("GR32"), true, false), "/body/symmetry/braid", json!(["1", "1"]), "2:1"),
        m("symmetry.unit", monoidal_doc(&v("GR32"), true, false), "/body/symmetry/braid", json!(["0", "1"]), "1:1"),
        m("closed.bijection", monoidal_doc(&v("BOOL"), true, true), "/body/closed/homObj", json!(["0", "0"]), "0"),
        m("vcat.assoc", vcategory_doc("GR23", false), "/body/vcategory/comp", json!(["0", "1", "0"]), "0:1"),
        m("vcat.unit", vcategory_doc("CYC3", false), "/body/vcategory/unit", json!("*"), "1"),
        m("vstructure.assoc", vstructure_doc("GR23"), "/body/comp", json!(["0", "1", "0"]), "0:1"),
        m("vstructure.left-action", vstructure_doc("GR23"), "/body/baseV/runit", json!("1"), "1:1"),
        m("vstructure.right-action", vstructure_doc("GR23"), "/body/baseV/lunit", json!("1"), "1:1"),
        m("cylinder.cp1-1", cylinder_doc("CYC3"), "/body/cylinder/alpha", json!(["*", "*"]), "1"),
        m("path.cp2-1-25", path_doc("CYC3"), "/body/path/beta", json!(["*", "*"]), "1"),
        m("module.assoc", vmodule_doc("GR23"), "/body/assoc", json!(["1", "1", "1"]), "1:1"),
        m("module.unit", vmodule_doc("CYC3"), "/body/lunit", json!("*"), "1"),
        m("moduleclosed.naturality", tensor_closed_doc("GR23"), "/body/module/phi", json!(["0", "0", "0:0"]), "0:1"),
        m("bimodule.cp2-8-1", bimodule_doc("GR23"), "/body/module/assocOp", json!(["1", "1", "0"]), "0:1"),
        m("bimodule.cp2-8-2", bimodule_doc("GR23"), "/body/module/assocOp", json!(["0", "1", "1"]), "0:1"),
        m("bimodule.cp2-8-3", bimodule_doc("GR23"), "/body/module/lunitOp", json!("1"), "1:1"),
        m("comodule.assoc", bimodule_doc("GR23"), "/body/module/assocOp", json!(["1", "1", "1"]), "1:1"),
        m("comodule.unit", bimodule_doc("GR23"), "/body/module/lunitOp", json!("0"), "0:1"),
    ]
}

fn well_formed(r: &CheckReport) -> bool {
    !r.site.is_empty()
        && match (&r.lhs, &r.rhs, r.witnesses) {
            (Some(l), Some(rh), None) => l != rh,
            (None, None, Some(n)) => n != 1,
            _ => false,
        }
}

fn mutation_sensitivity() -> Outcome {
    let ms = mutations();
    let covered: BTreeSet<&str> = ms.iter().map(|m| m.law).collect();
    let missing: Vec<&&str> = LAW_REGISTRY.iter().filter(|l| !covered.contains(**l)).collect();
    ensure(missing.is_empty(), || format!("no mutation for {missing:?}"))?;
    let mut bad = Vec::new();
    for m in &ms {
        let before = check_document(&m.doc).map_err(e(m.law))?;
        ensure(before.is_empty(), || format!("{}: fixture does not pass: {before:?}", m.law))?;
        let reps = check_document(&mutate(&m.doc, m.table, m.key.clone(), m.new)).map_err(e(m.law))?;
        let laws: BTreeSet<&str> = reps.iter().map(|r| r.law.as_str()).collect();
        if laws != BTreeSet::from([m.law]) || !reps.iter().all(well_formed) {
            bad.push(format!("{} -> {laws:?}", m.law));
        }
    }
    ensure(bad.is_empty(), || format!("{} of {} laws not isolated: {}", bad.len(), ms.len(), bad.join("; ")))
}

fn format_stability() -> Outcome {
    let mut docs = Vec::new();
    for n in ["bool", "trop3", "trop4", "cyc1", "cyc2", "cyc3", "poset-diamond", "self-bool", "self-trop3", "self-cyc3"] {
        docs.push((n.to_string(), instance(n).map_err(e(n))?));
    }
    let ops = [
        Op::InducedVstructure,
        Op::AssociatedVcat,
        Op::Underlying,
        Op::ModuleToCylinder,
        Op::CylinderToModule,
        Op::CylinderToTensored,
        Op::TensoredToCylinder,
        Op::BimoduleComplete,
    ];
    // close the builtins under every applicable construction
    let mut frontier = docs.clone();
    while let Some((n, d)) = frontier.pop() {
        for op in ops {
            if let Ok(out) = construct(&d, op) {
                let name = format!("{n} | {op:?}");
                if !docs.iter().any(|(_, x)| *x == out) {
                    docs.push((name.clone(), out.clone()));
                    frontier.push((name, out));
                }
            }
        }
    }
    for (n, d) in &docs {
        let text = serialize(d);
        let back = parse(&text).map_err(e(n))?;
        ensure(back == *d, || format!("{n}: parse∘serialize"))?;
        ensure(serialize(&back) == text, || format!("{n}: serialize∘parse"))?;
    }
    let dir = tempfile::tempdir().map_err(e("tempdir"))?;
    for name in ["poset-diamond", "self-trop3", "self-cyc3"] {
        let file = dir.path().join(format!("{name}.json"));
        std::fs::write(&file, serialize(&instance(name).map_err(e(name))?)).map_err(e(name))?;
        let st = Command::new(env!("CARGO_BIN_EXE_encat"))
            .args(["roundtrip", file.to_str().unwrap(), "--pair", "module-cylinder"])
            .output()
            .map_err(e(name))?;
        ensure(st.status.code() == Some(0), || format!("{name}: roundtrip exit {:?}: {}", st.status.code(), String::from_utf8_lossy(&st.stderr)))?;
    }
    ensure(docs.len() > 10, || format!("only {} documents", docs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("coherence suite", coherence),
        ("derived-lemma oracle", derived_oracles),
        ("V-category round trip", vcat_roundtrip),
        ("cylinder/tensored round trip", tensored_roundtrip),
        ("module/cylinder bijection", module_cylinder),
        ("bimodule completion", completion),
        ("uniqueness properties", uniqueness),
        ("mutation sensitivity", mutation_sensitivity),
        ("format stability", format_stability),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut res = f();
        let el = t.elapsed();
        if res.is_ok() && el > LIMIT {
            res = Err(format!("took {el:?}"));
        }
        match res {
            Ok(()) => println!("criterion {}: PASS {name} ({el:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({el:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
