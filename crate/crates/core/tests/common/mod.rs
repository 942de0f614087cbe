//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use encat::fincat::{Arrow, FinCategory};
use encat::instances::{build_bool, build_cyc, build_graded, build_trop, module_self, poset_diamond, product_instance, Instance};
use encat::interface::{Document, ModuleDoc, MonoidalDoc};
use encat::monoidal::{MonoidalData, SymmetryData};
use encat::vmodule::bimodule_completion;

pub fn v(name: &str) -> Instance {
    match name {
        "BOOL" => build_bool(),
        "TROP3" => build_trop(3).unwrap(),
        "TROP4" => build_trop(4).unwrap(),
        "CYC1" => build_cyc(1).unwrap(),
        "CYC2" => build_cyc(2).unwrap(),
        "CYC3" => build_cyc(3).unwrap(),
        "GR23" => build_graded(2, 3).unwrap(),
        "GR32" => build_graded(3, 2).unwrap(),
        "BOOLxCYC3" => product_instance(&build_bool(), &build_cyc(3).unwrap()).unwrap(),
        other => panic!("unknown fixture {other}"),
    }
}

pub fn monoidal_doc(i: &Instance, sym: bool, closed: bool) -> Document {
    Document::Monoidal(MonoidalDoc {
        monoidal: i.monoidal.clone(),
        symmetry: sym.then(|| i.symmetry.clone()),
        closed: closed.then(|| i.closed.clone()),
    })
}

pub fn closed_module_doc(name: &str) -> Document {
    if name == "POSET" {
        let b = build_bool();
        return Document::ClosedModule(ModuleDoc { module: poset_diamond(), closed: Some(b.closed), symmetry: Some(b.symmetry) });
    }
    let i = v(name);
    Document::ClosedModule(ModuleDoc { module: module_self(&i).unwrap(), closed: Some(i.closed), symmetry: Some(i.symmetry) })
}

pub fn bimodule_doc(name: &str) -> Document {
    let Document::ClosedModule(d) = closed_module_doc(name) else { unreachable!() };
    let sym = d.symmetry.clone().unwrap();
    Document::Bimodule(ModuleDoc { module: bimodule_completion(&d.module, &sym).unwrap(), closed: d.closed, symmetry: d.symmetry })
}

/// Objects `I, p, q, z, 0` with `p⊗q = q⊗p = z` and every other product
/// of non-units `0`; only `z` has a nontrivial automorphism `z:1` of order
/// two. Monoidal and symmetric but not closed.
pub fn pq_monoidal() -> (MonoidalData, SymmetryData) {
    let obs = ["I", "p", "q", "z", "0"];
    let tensor = |x: &str, y: &str| -> &'static str {
        let pick = |s: &str| obs.iter().copied().find(|o| *o == s).unwrap();
        match (x, y) {
            ("I", y) => pick(y),
            (x, "I") => pick(x),
            ("p", "q") | ("q", "p") => "z",
            _ => "0",
        }
    };
    let id = |x: &str| format!("id:{x}");
    let mut cat = FinCategory::default();
    for x in obs {
        cat.objects.insert(x.into());
        cat.identity.insert(x.into(), id(x));
        cat.morphisms.insert(id(x), Arrow { src: x.into(), dst: x.into() });
        cat.comp.insert((id(x), id(x)), id(x));
    }
    cat.morphisms.insert("z:1".into(), Arrow { src: "z".into(), dst: "z".into() });
    for (f, g, h) in [("id:z", "z:1", "z:1"), ("z:1", "id:z", "z:1"), ("z:1", "z:1", "id:z")] {
        cat.comp.insert((f.into(), g.into()), h.into());
    }
    let mut m = MonoidalData { unit: "I".into(), ..Default::default() };
    let mut s = SymmetryData::default();
    let src = |f: &str| cat.morphisms[f].src.clone();
    for x in obs {
        m.lunit.insert(x.into(), id(x));
        m.runit.insert(x.into(), id(x));
        for y in obs {
            let xy = tensor(x, y);
            m.tensor_obj.insert((x.into(), y.into()), xy.into());
            s.braid.insert((x.into(), y.into()), id(xy));
            for w in obs {
                m.assoc.insert((x.into(), y.into(), w.into()), id(tensor(xy, w)));
            }
        }
    }
    let mors: Vec<String> = cat.morphisms.keys().cloned().collect();
    for f in &mors {
        for g in &mors {
            let (x, y) = (src(f), src(g));
            let h = match (x.as_str(), y.as_str()) {
                ("I", _) => g.clone(),
                (_, "I") => f.clone(),
                _ => id(tensor(&x, &y)),
            };
            m.tensor_mor.insert((f.clone(), g.clone()), h);
        }
    }
    m.base = cat;
    (m, s)
}

pub fn vcategory_doc(name: &str, tensored: bool) -> Document {
    let i = v(name);
    let vs = encat::monoidal::self_vstructure(&i.monoidal, &i.closed).unwrap();
    let cyl = encat::monoidal::self_cylinder(&i.monoidal, &i.closed).unwrap();
    let (vc, td) = encat::equiv::cylinder_to_tensored(&vs, &cyl).unwrap();
    Document::VCategory(encat::interface::VCategoryDoc { vcategory: vc, closed: Some(i.closed), tensored: tensored.then_some(td) })
}

pub fn vstructure_doc(name: &str) -> Document {
    let i = v(name);
    Document::VStructure(encat::monoidal::self_vstructure(&i.monoidal, &i.closed).unwrap())
}

pub fn cylinder_doc(name: &str) -> Document {
    let i = v(name);
    Document::Cylinder(encat::interface::CylinderDoc {
        vstructure: encat::monoidal::self_vstructure(&i.monoidal, &i.closed).unwrap(),
        cylinder: encat::monoidal::self_cylinder(&i.monoidal, &i.closed).unwrap(),
        closed: i.closed,
    })
}

pub fn path_doc(name: &str) -> Document {
    let i = v(name);
    Document::Path(encat::interface::PathDoc {
        vstructure: encat::monoidal::self_vstructure(&i.monoidal, &i.closed).unwrap(),
        path: encat::monoidal::self_path(&i.monoidal, &i.closed, &i.symmetry).unwrap(),
        closed: i.closed,
        symmetry: i.symmetry,
    })
}

pub fn vmodule_doc(name: &str) -> Document {
    let Document::ClosedModule(d) = closed_module_doc(name) else { unreachable!() };
    Document::VModule(d.module.tensor_closed.module)
}

pub fn tensor_closed_doc(name: &str) -> Document {
    let Document::ClosedModule(d) = closed_module_doc(name) else { unreachable!() };
    Document::TensorClosed(ModuleDoc { module: d.module.tensor_closed, closed: d.closed, symmetry: d.symmetry })
}

/// Every fixture, labelled.
pub fn fixtures() -> Vec<(String, Document)> {
    let mut out: Vec<(String, Document)> = Vec::new();
    let (pm, ps) = pq_monoidal();
    out.push(("monoidal PQ".into(), Document::Monoidal(MonoidalDoc { monoidal: pm, symmetry: Some(ps), closed: None })));
    out.push(("monoidal GR23".into(), monoidal_doc(&v("GR23"), false, false)));
    out.push(("monoidal+sym GR32".into(), monoidal_doc(&v("GR32"), true, false)));
    for n in ["BOOL", "CYC3", "GR23"] {
        out.push((format!("monoidal+sym+closed {n}"), monoidal_doc(&v(n), true, true)));
    }
    for n in ["CYC3", "GR23", "BOOLxCYC3"] {
        out.push((format!("vcategory {n}"), vcategory_doc(n, false)));
        out.push((format!("vcategory+tensored {n}"), vcategory_doc(n, true)));
        out.push((format!("vstructure {n}"), vstructure_doc(n)));
        out.push((format!("cylinder {n}"), cylinder_doc(n)));
        out.push((format!("path {n}"), path_doc(n)));
    }
    for n in ["POSET", "CYC3", "GR23", "GR32", "BOOLxCYC3"] {
        out.push((format!("vmodule {n}"), vmodule_doc(n)));
        out.push((format!("tensorclosed {n}"), tensor_closed_doc(n)));
        out.push((format!("closedmodule {n}"), closed_module_doc(n)));
        out.push((format!("bimodule {n}"), bimodule_doc(n)));
    }
    out
}
