//! Built-in closed symmetric monoidal categories and modules over them.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::fincat::{pair_morphism, pair_object, product_category, Arrow, Bifunctor, FinCategory};
use crate::monoidal::{hom_bifunctor, transpose_pi, transpose_pi_inv, ClosedData, MonoidalData, SymmetryData};
use crate::tables::{p, t};
use crate::vmodule::{ClosedVModuleData, TensorClosedModuleData, VModuleData};
use crate::Id;

/// A closed symmetric monoidal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub monoidal: MonoidalData,
    pub symmetry: SymmetryData,
    pub closed: ClosedData,
}

fn poset_morphism(x: &str, y: &str) -> Id {
    if x.chars().count() == 1 && y.chars().count() == 1 {
        format!("m{x}{y}")
    } else {
        format!("m{x}_{y}")
    }
}

/// The thin category of a preorder, with identities `id:x` and `m<x><y>`
/// for every other relation `x ≤ y`.
pub fn thin_category<F: Fn(&str, &str) -> bool>(objects: &[&str], leq: F) -> FinCategory {
    let names: Vec<(String, &str, &str)> = objects
        .iter()
        .flat_map(|&x| objects.iter().map(move |&y| (x, y)))
        .filter(|(x, y)| x != y && leq(x, y))
        .map(|(x, y)| (poset_morphism(x, y), x, y))
        .collect();
    let mors: Vec<(&str, &str, &str)> = names.iter().map(|(f, x, y)| (f.as_str(), *x, *y)).collect();
    let arrows: std::collections::BTreeMap<String, (String, String)> =
        mors.iter().map(|(f, x, y)| (f.to_string(), (x.to_string(), y.to_string()))).collect();
    let id_of = |x: &str| format!("id:{x}");
    FinCategory::from_fn(objects, &mors, |f, g| {
        let (x, _) = &arrows[f];
        let (_, z) = &arrows[g];
        if x == z {
            id_of(x)
        } else {
            poset_morphism(x, z)
        }
    })
}

/// The unique morphism `x → y` of a thin category.
pub fn unique(cat: &FinCategory, x: &str, y: &str) -> Result<Id> {
    match cat.hom(x, y).as_slice() {
        [f] => Ok(f.to_string()),
        other => Err(Error::witness("thin morphism", &[x, y], other.len())),
    }
}

/// Closed symmetric monoidal preorder: every structure component is the
/// unique morphism of its type.
fn thin_instance<T, H>(cat: FinCategory, tensor: T, unit: &str, hom: H) -> Result<Instance>
where
    T: Fn(&str, &str) -> String,
    H: Fn(&str, &str) -> String,
{
    let obs: Vec<Id> = cat.objects.iter().cloned().collect();
    let mut m = MonoidalData { unit: unit.to_string(), ..Default::default() };
    let mut s = SymmetryData::default();
    let mut cl = ClosedData::default();
    for x in &obs {
        for y in &obs {
            m.tensor_obj.insert(p(x, y), tensor(x, y));
            s.braid.insert(p(x, y), unique(&cat, &tensor(x, y), &tensor(y, x))?);
            let v = hom(x, y);
            cl.eval.insert(p(x, y), unique(&cat, &tensor(&v, x), y)?);
            cl.hom_obj.insert(p(x, y), v);
            for z in &obs {
                let src = tensor(&tensor(x, y), z);
                let dst = tensor(x, &tensor(y, z));
                m.assoc.insert(t(x, y, z), unique(&cat, &src, &dst)?);
            }
        }
        m.lunit.insert(x.clone(), unique(&cat, &tensor(unit, x), x)?);
        m.runit.insert(x.clone(), unique(&cat, &tensor(x, unit), x)?);
    }
    for (f, Arrow { src: a, dst: b }) in &cat.morphisms {
        for (g, Arrow { src: c, dst: d }) in &cat.morphisms {
            m.tensor_mor.insert(p(f, g), unique(&cat, &tensor(a, c), &tensor(b, d))?);
        }
    }
    m.base = cat;
    Ok(Instance { monoidal: m, symmetry: s, closed: cl })
}

fn num(x: &str) -> usize {
    x.parse().expect("numeric object id")
}

/// Booleans `0 ≤ 1` under conjunction, with implication as internal hom.
pub fn build_bool() -> Instance {
    let cat = thin_category(&["0", "1"], |x, y| x <= y);
    thin_instance(
        cat,
        |x, y| (num(x).min(num(y))).to_string(),
        "1",
        |x, y| (1 - num(x)).max(num(y)).to_string(),
    )
    .expect("boolean instance")
}

/// Truncated tropical quantale on `{0, …, n−1}`: a morphism `a → b` iff
/// `a ≥ b`, `a ⊕ b = min(a+b, n−1)`, unit 0, `V̄(a, b) = b ∸ a`.
pub fn build_trop(n: usize) -> Result<Instance> {
    if n < 2 {
        return Err(Error::Parameter(format!("TROP needs n >= 2, got {n}")));
    }
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let cat = thin_category(&refs, |x, y| num(x) >= num(y));
    thin_instance(
        cat,
        move |x, y| (num(x) + num(y)).min(n - 1).to_string(),
        "0",
        |x, y| num(y).saturating_sub(num(x)).to_string(),
    )
}

/// The cyclic group `Z/n` as a one-object category, tensor = composition =
/// addition, and every structure component the neutral element `"0"`.
pub fn build_cyc(n: usize) -> Result<Instance> {
    if n < 1 {
        return Err(Error::Parameter("CYC needs n >= 1".into()));
    }
    let star = "*".to_string();
    let mut cat = FinCategory::default();
    cat.objects.insert(star.clone());
    cat.identity.insert(star.clone(), "0".into());
    for i in 0..n {
        cat.morphisms.insert(i.to_string(), Arrow { src: star.clone(), dst: star.clone() });
        for j in 0..n {
            cat.comp.insert(p(&i.to_string(), &j.to_string()), ((i + j) % n).to_string());
        }
    }
    let mut m = MonoidalData { unit: star.clone(), ..Default::default() };
    m.tensor_mor = cat.comp.clone();
    m.tensor_obj.insert(p(&star, &star), star.clone());
    m.assoc.insert(t(&star, &star, &star), "0".into());
    m.lunit.insert(star.clone(), "0".into());
    m.runit.insert(star.clone(), "0".into());
    m.base = cat;
    let mut s = SymmetryData::default();
    s.braid.insert(p(&star, &star), "0".into());
    let mut cl = ClosedData::default();
    cl.hom_obj.insert(p(&star, &star), star.clone());
    cl.eval.insert(p(&star, &star), "0".into());
    Ok(Instance { monoidal: m, symmetry: s, closed: cl })
}

/// A finite poset with bottom and top as a closed module over BOOL:
/// `1⊗X = X`, `0⊗X = ⊥`, `1⋔X = X`, `0⋔X = ⊤`, `S̄(X,Y) = [X ≤ Y]`.
/// `leq` is closed reflexively and transitively.
pub fn build_poset_module(objects: &[&str], leq: &[(&str, &str)]) -> Result<ClosedVModuleData> {
    let mut rel: BTreeSet<(&str, &str)> = leq.iter().copied().collect();
    for &(x, y) in &rel {
        for o in [x, y] {
            if !objects.contains(&o) {
                return Err(Error::Parameter(format!("relation mentions unknown element {o}")));
            }
        }
    }
    rel.extend(objects.iter().map(|&x| (x, x)));
    loop {
        let extra: Vec<_> = rel
            .iter()
            .flat_map(|&(x, y)| rel.iter().filter(move |&&(y2, _)| y2 == y).map(move |&(_, z)| (x, z)))
            .filter(|e| !rel.contains(e))
            .collect();
        if extra.is_empty() {
            break;
        }
        rel.extend(extra);
    }
    if let Some(&(x, y)) = rel.iter().find(|&&(x, y)| x != y && rel.contains(&(y, x))) {
        return Err(Error::Parameter(format!("not antisymmetric: {x} and {y}")));
    }
    let le = |x: &str, y: &str| rel.contains(&(x, y));
    let bot = objects.iter().find(|&&b| objects.iter().all(|&y| le(b, y)));
    let top = objects.iter().find(|&&t| objects.iter().all(|&y| le(y, t)));
    let (Some(&bot), Some(&top)) = (bot, top) else {
        return Err(Error::Parameter("poset needs a bottom and a top".into()));
    };
    let v = build_bool();
    let m = &v.monoidal;
    let s = thin_category(objects, le);
    let tensor = |k: &str, x: &str| if k == "1" { x.to_string() } else { bot.to_string() };
    let cot = |k: &str, x: &str| if k == "1" { x.to_string() } else { top.to_string() };
    let shom = |x: &str, y: &str| if le(x, y) { "1".to_string() } else { "0".to_string() };
    let mut action = Bifunctor::default();
    let mut cotensor = Bifunctor::default();
    let mut hom = Bifunctor::default();
    let vobs = m.objects();
    for &k in &vobs {
        for &x in objects {
            action.on_objects.insert(p(k, x), tensor(k, x));
            cotensor.on_objects.insert(p(k, x), cot(k, x));
        }
    }
    for &x in objects {
        for &y in objects {
            hom.on_objects.insert(p(x, y), shom(x, y));
        }
    }
    for (u, ua) in &m.base.morphisms {
        for (f, fa) in &s.morphisms {
            action.on_morphisms.insert(p(u, f), unique(&s, &tensor(&ua.src, &fa.src), &tensor(&ua.dst, &fa.dst))?);
            // read in S^op, f runs from its target to its source
            cotensor.on_morphisms.insert(p(u, f), unique(&s, &cot(&ua.dst, &fa.src), &cot(&ua.src, &fa.dst))?);
        }
    }
    for (f, fa) in &s.morphisms {
        for (g, ga) in &s.morphisms {
            hom.on_morphisms.insert(p(f, g), unique(&m.base, &shom(&fa.dst, &ga.src), &shom(&fa.src, &ga.dst))?);
        }
    }
    let mut md = VModuleData { base_v: m.clone(), base_s: s.clone(), action, ..Default::default() };
    let mut phi = BTreeMap::new();
    let mut psi = BTreeMap::new();
    for &k in &vobs {
        for &l in &vobs {
            for &x in objects {
                md.assoc.insert(t(k, l, x), unique(&s, &tensor(&m.t(k, l)?, x), &tensor(k, &tensor(l, x)))?);
            }
        }
        for &x in objects {
            for &y in objects {
                for f in s.hom(&tensor(k, x), y) {
                    phi.insert(t(k, x, f), unique(&m.base, k, &shom(x, y))?);
                }
                for f in s.hom(y, &cot(k, x)) {
                    psi.insert(t(k, x, f), unique(&m.base, k, &shom(y, x))?);
                }
            }
        }
    }
    for &x in objects {
        md.lunit.insert(x.to_string(), unique(&s, &tensor(&m.unit, x), x)?);
    }
    Ok(ClosedVModuleData { tensor_closed: TensorClosedModuleData { module: md, hom, phi }, cotensor, psi })
}

/// The diamond `bot ≤ x, y ≤ top` as a module over BOOL.
pub fn poset_diamond() -> ClosedVModuleData {
    build_poset_module(&["bot", "x", "y", "top"], &[("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")])
        .expect("diamond module")
}

/// V as a closed module over itself: action `⊗`, `S̄ = V̄`, `φ = π`,
/// `K⋔X = V̄(K,X)` and `ψ(g) = π(π⁻¹(g) ∘ c)`.
pub fn module_self(v: &Instance) -> Result<ClosedVModuleData> {
    let (m, cl, sym) = (&v.monoidal, &v.closed, &v.symmetry);
    let action = Bifunctor { on_objects: m.tensor_obj.clone(), on_morphisms: m.tensor_mor.clone() };
    let module = VModuleData { base_v: m.clone(), base_s: m.base.clone(), action, assoc: m.assoc.clone(), lunit: m.lunit.clone() };
    let hom = hom_bifunctor(m, cl)?;
    let obs = m.objects();
    let mut phi = BTreeMap::new();
    let mut psi = BTreeMap::new();
    for &k in &obs {
        for &x in &obs {
            for &y in &obs {
                for f in m.base.hom(&m.t(k, x)?, y) {
                    phi.insert(t(k, x, f), transpose_pi(m, cl, k, x, f)?);
                }
                for g in m.base.hom(y, &cl.hom(k, x)?) {
                    let back = transpose_pi_inv(m, cl, k, x, g)?;
                    psi.insert(t(k, x, g), transpose_pi(m, cl, k, y, &m.seq(&[sym.c(k, y)?, back])?)?);
                }
            }
        }
    }
    Ok(ClosedVModuleData {
        tensor_closed: TensorClosedModuleData { module, hom: hom.clone(), phi },
        cotensor: Bifunctor { on_objects: cl.hom_obj.clone(), on_morphisms: hom.on_morphisms },
        psi,
    })
}

/// Componentwise product of two closed symmetric monoidal categories.
pub fn product_instance(a: &Instance, b: &Instance) -> Result<Instance> {
    let (ma, mb) = (&a.monoidal, &b.monoidal);
    let pm = |f: &str, g: &str| pair_morphism(&ma.base, &mb.base, f, g);
    let mut m = MonoidalData { base: product_category(&ma.base, &mb.base)?, unit: pair_object(&ma.unit, &mb.unit), ..Default::default() };
    let mut s = SymmetryData::default();
    let mut cl = ClosedData::default();
    let pairs: Vec<(&str, &str)> = ma.objects().into_iter().flat_map(|x| mb.objects().into_iter().map(move |y| (x, y))).collect();
    for &(x, y) in &pairs {
        let o = pair_object(x, y);
        m.lunit.insert(o.clone(), pm(&ma.l(x)?, &mb.l(y)?)?);
        m.runit.insert(o.clone(), pm(&ma.r(x)?, &mb.r(y)?)?);
        for &(x2, y2) in &pairs {
            let o2 = pair_object(x2, y2);
            m.tensor_obj.insert(p(&o, &o2), pair_object(&ma.t(x, x2)?, &mb.t(y, y2)?));
            s.braid.insert(p(&o, &o2), pm(&a.symmetry.c(x, x2)?, &b.symmetry.c(y, y2)?)?);
            cl.hom_obj.insert(p(&o, &o2), pair_object(&a.closed.hom(x, x2)?, &b.closed.hom(y, y2)?));
            cl.eval.insert(p(&o, &o2), pm(&a.closed.ev(x, x2)?, &b.closed.ev(y, y2)?)?);
            for &(x3, y3) in &pairs {
                m.assoc.insert(t(&o, &o2, &pair_object(x3, y3)), pm(&ma.a(x, x2, x3)?, &mb.a(y, y2, y3)?)?);
            }
        }
    }
    for (f, g) in ma.morphisms().into_iter().flat_map(|f| mb.morphisms().into_iter().map(move |g| (f, g))) {
        for (f2, g2) in ma.morphisms().into_iter().flat_map(|f| mb.morphisms().into_iter().map(move |g| (f, g))) {
            m.tensor_mor.insert(p(&pm(f, g)?, &pm(f2, g2)?), pm(&ma.tm(f, f2)?, &mb.tm(g, g2)?)?);
        }
    }
    Ok(Instance { monoidal: m, symmetry: s, closed: cl })
}

/// `Z/m` as a discrete monoidal category, each object carrying the
/// automorphism group `Z/n`: morphisms `x:k`, `⊗` adds both components,
/// `V̄(x, y) = y − x`, all structure components identities.
pub fn build_graded(m: usize, n: usize) -> Result<Instance> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter(format!("graded instance needs m, n >= 1, got {m}, {n}")));
    }
    let name = |x: usize, k: usize| format!("{x}:{k}");
    let mut cat = FinCategory::default();
    for x in 0..m {
        cat.objects.insert(x.to_string());
        cat.identity.insert(x.to_string(), name(x, 0));
        for k in 0..n {
            cat.morphisms.insert(name(x, k), Arrow { src: x.to_string(), dst: x.to_string() });
            for j in 0..n {
                cat.comp.insert(p(&name(x, k), &name(x, j)), name(x, (k + j) % n));
            }
        }
    }
    let mut mo = MonoidalData { unit: "0".into(), ..Default::default() };
    let mut s = SymmetryData::default();
    let mut cl = ClosedData::default();
    for x in 0..m {
        mo.lunit.insert(x.to_string(), name(x, 0));
        mo.runit.insert(x.to_string(), name(x, 0));
        for y in 0..m {
            let (xs, ys, xy) = (x.to_string(), y.to_string(), (x + y) % m);
            mo.tensor_obj.insert(p(&xs, &ys), xy.to_string());
            s.braid.insert(p(&xs, &ys), name(xy, 0));
            cl.hom_obj.insert(p(&xs, &ys), ((y + m - x) % m).to_string());
            cl.eval.insert(p(&xs, &ys), name(y, 0));
            for z in 0..m {
                mo.assoc.insert(t(&xs, &ys, &z.to_string()), name((xy + z) % m, 0));
            }
            for k in 0..n {
                for j in 0..n {
                    mo.tensor_mor.insert(p(&name(x, k), &name(y, j)), name(xy, (k + j) % n));
                }
            }
        }
    }
    mo.base = cat;
    Ok(Instance { monoidal: mo, symmetry: s, closed: cl })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{check_closed, check_monoidal, check_symmetry, internal_composition_b};
    use crate::vmodule::{bimodule_completion, check_closed_bimodule, check_closed_module};

    fn passes(i: &Instance) -> bool {
        check_monoidal(&i.monoidal).unwrap().is_empty()
            && check_symmetry(&i.monoidal, &i.symmetry).unwrap().is_empty()
            && check_closed(&i.monoidal, &i.closed).unwrap().is_empty()
    }

    fn strict(i: &Instance) -> bool {
        let m = &i.monoidal;
        let c = &m.base;
        m.assoc.values().chain(m.lunit.values()).chain(m.runit.values()).all(|f| c.is_identity(f) || c.hom(c.src(f).unwrap(), c.dst(f).unwrap()).len() == 1)
    }

    #[test]
    fn builtins_pass_and_are_strict() {
        let mut all = vec![build_bool()];
        all.extend((2..=5).map(|n| build_trop(n).unwrap()));
        all.extend((1..=4).map(|n| build_cyc(n).unwrap()));
        all.push(build_graded(2, 3).unwrap());
        all.push(build_graded(3, 2).unwrap());
        all.push(product_instance(&build_bool(), &build_cyc(3).unwrap()).unwrap());
        all.push(product_instance(&build_trop(3).unwrap(), &build_bool()).unwrap());
        for i in &all {
            assert!(passes(i), "{:?}", i.monoidal.base.objects);
            assert!(strict(i));
        }
    }

    #[test]
    fn bool_values() {
        let b = build_bool();
        assert_eq!(b.closed.hom("1", "0").unwrap(), "0");
        assert_eq!(b.closed.hom("0", "0").unwrap(), "1");
        assert_eq!(b.closed.hom("0", "1").unwrap(), "1");
        assert_eq!(b.monoidal.base.hom("0", "1"), vec!["m01"]);
        assert!(b.monoidal.base.hom("1", "0").is_empty());
    }

    #[test]
    fn trop_values() {
        let n = 3;
        let v = build_trop(n).unwrap();
        // V̄(a,b) is the least x with x ⊕ a ≥ b
        for a in 0..n {
            for b in 0..n {
                let oracle = (0..n).find(|x| (x + a).min(n - 1) >= b).unwrap();
                assert_eq!(v.closed.hom(&a.to_string(), &b.to_string()).unwrap(), oracle.to_string());
            }
        }
        assert_eq!(v.closed.hom("1", "2").unwrap(), "1");
        assert_eq!(v.monoidal.t("2", "2").unwrap(), "2");
        for a in ["0", "1", "2"] {
            assert_eq!(v.monoidal.t("0", a).unwrap(), a);
        }
        assert!(matches!(build_trop(1), Err(Error::Parameter(_))));
    }

    #[test]
    fn cyc_values() {
        let c = build_cyc(3).unwrap();
        let (m, cl) = (&c.monoidal, &c.closed);
        for f in ["0", "1", "2"] {
            // the unique g with ε∘(g⊗1) = f
            let oracle: Vec<&str> = ["0", "1", "2"].into_iter().filter(|g| m.seq(&[m.tm(g, "0").unwrap(), cl.ev("*", "*").unwrap()]).unwrap() == f).collect();
            assert_eq!(oracle, vec![f]);
            assert_eq!(transpose_pi(m, cl, "*", "*", f).unwrap(), f);
        }
        assert_eq!(internal_composition_b(m, cl, "*", "*", "*").unwrap(), "0");
        assert!(passes(&build_cyc(1).unwrap()));
    }

    #[test]
    fn poset_module_values() {
        let d = poset_diamond();
        let md = &d.tensor_closed.module;
        assert_eq!(md.t("0", "x").unwrap(), "bot");
        assert_eq!(md.t("1", "x").unwrap(), "x");
        assert_eq!(d.cot("0", "x").unwrap(), "top");
        assert_eq!(d.cot("1", "y").unwrap(), "y");
        assert_eq!(d.tensor_closed.h("x", "y").unwrap(), "0");
        assert_eq!(d.tensor_closed.h("bot", "y").unwrap(), "1");
        assert_eq!(md.base_s.hom(&md.t("0", "x").unwrap(), "y").len(), 1);
        assert_eq!(md.l("x").unwrap(), "id:x");
        let a = md.a("0", "1", "x").unwrap();
        assert_eq!(md.base_s.src(&a).unwrap(), "bot");
        assert_eq!(md.base_s.dst(&a).unwrap(), "bot");
        assert!(check_closed_module(&d).unwrap().is_empty());
        let b = build_bool();
        let cb = bimodule_completion(&d, &b.symmetry).unwrap();
        assert!(check_closed_bimodule(&cb, &b.closed, &b.symmetry).unwrap().is_empty());
    }

    #[test]
    fn poset_module_needs_bounds() {
        let err = build_poset_module(&["a", "b"], &[]).unwrap_err();
        assert!(matches!(err, Error::Parameter(_)));
        let chain = build_poset_module(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(check_closed_module(&chain).unwrap().is_empty());
    }

    #[test]
    fn self_modules() {
        let t3 = module_self(&build_trop(3).unwrap()).unwrap();
        for x in ["0", "1", "2"] {
            assert_eq!(t3.cot("0", x).unwrap(), x);
        }
        let c3 = module_self(&build_cyc(3).unwrap()).unwrap();
        for f in ["0", "1", "2"] {
            assert_eq!(c3.psi("*", "*", f).unwrap(), f);
        }
        let b = build_bool();
        let cb = bimodule_completion(&module_self(&b).unwrap(), &b.symmetry).unwrap();
        assert!(check_closed_bimodule(&cb, &b.closed, &b.symmetry).unwrap().is_empty());
    }

    #[test]
    fn graded_and_product_modules() {
        for v in [build_graded(2, 3).unwrap(), product_instance(&build_bool(), &build_cyc(2).unwrap()).unwrap()] {
            let cm = module_self(&v).unwrap();
            assert!(check_closed_module(&cm).unwrap().is_empty());
            let cb = bimodule_completion(&cm, &v.symmetry).unwrap();
            assert!(check_closed_bimodule(&cb, &v.closed, &v.symmetry).unwrap().is_empty());
        }
        assert_eq!(product_instance(&build_bool(), &build_bool()).unwrap().monoidal.base.morphisms.len(), 9);
    }
}
