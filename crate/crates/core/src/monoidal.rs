//! Monoidal, symmetric and closed structure on a finite category, with the
//! derived transposes and internal operations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{check_bifunctor, morphism_inverse, opposite_category, validate_category, Bifunctor, FinCategory};
use crate::report::{CheckReport, Reports};
use crate::tables::{entries, p, t, Pair, Triple};
use crate::vstruct::{CylinderAssignment, PathAssignment, VStructureData};
use crate::Id;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MonoidalData {
    pub base: FinCategory,
    #[serde(with = "entries")]
    pub tensor_obj: BTreeMap<Pair, Id>,
    #[serde(with = "entries")]
    pub tensor_mor: BTreeMap<Pair, Id>,
    pub unit: Id,
    #[serde(with = "entries")]
    pub assoc: BTreeMap<Triple, Id>,
    #[serde(with = "entries")]
    pub lunit: BTreeMap<Id, Id>,
    #[serde(with = "entries")]
    pub runit: BTreeMap<Id, Id>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryData {
    #[serde(with = "entries")]
    pub braid: BTreeMap<Pair, Id>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedData {
    #[serde(with = "entries")]
    pub hom_obj: BTreeMap<Pair, Id>,
    #[serde(with = "entries")]
    pub eval: BTreeMap<Pair, Id>,
}

fn get<K: Ord + std::fmt::Debug>(map: &BTreeMap<K, Id>, table: &str, k: K) -> Result<Id> {
    map.get(&k).cloned().ok_or_else(|| Error::missing(table, k))
}

impl MonoidalData {
    pub fn objects(&self) -> Vec<&str> {
        self.base.objects.iter().map(|s| s.as_str()).collect()
    }

    pub fn morphisms(&self) -> Vec<&str> {
        self.base.morphisms.keys().map(|s| s.as_str()).collect()
    }

    pub fn t(&self, x: &str, y: &str) -> Result<Id> {
        get(&self.tensor_obj, "tensorObj", p(x, y))
    }

    pub fn tm(&self, f: &str, g: &str) -> Result<Id> {
        get(&self.tensor_mor, "tensorMor", p(f, g))
    }

    pub fn a(&self, x: &str, y: &str, z: &str) -> Result<Id> {
        get(&self.assoc, "assoc", t(x, y, z))
    }

    pub fn l(&self, x: &str) -> Result<Id> {
        get(&self.lunit, "lunit", x.to_string())
    }

    pub fn r(&self, x: &str) -> Result<Id> {
        get(&self.runit, "runit", x.to_string())
    }

    pub fn id(&self, x: &str) -> Result<Id> {
        Ok(self.base.id(x)?.to_string())
    }

    /// `1_x ⊗ f`
    pub fn lid(&self, x: &str, f: &str) -> Result<Id> {
        self.tm(self.base.id(x)?, f)
    }

    /// `f ⊗ 1_y`
    pub fn rid(&self, f: &str, y: &str) -> Result<Id> {
        self.tm(f, self.base.id(y)?)
    }

    pub fn seq<S: AsRef<str>>(&self, path: &[S]) -> Result<Id> {
        self.base.path(path)
    }

    pub fn src(&self, f: &str) -> Result<Id> {
        Ok(self.base.src(f)?.to_string())
    }

    pub fn dst(&self, f: &str) -> Result<Id> {
        Ok(self.base.dst(f)?.to_string())
    }

    pub fn inv(&self, f: &str) -> Result<Id> {
        crate::fincat::inverse(&self.base, f)
    }
}

impl SymmetryData {
    pub fn c(&self, x: &str, y: &str) -> Result<Id> {
        get(&self.braid, "braid", p(x, y))
    }
}

impl ClosedData {
    /// The internal hom object `V̄(y, z)`.
    pub fn hom(&self, y: &str, z: &str) -> Result<Id> {
        get(&self.hom_obj, "homObj", p(y, z))
    }

    /// `ε_{y,z}: V̄(y,z) ⊗ y → z`
    pub fn ev(&self, y: &str, z: &str) -> Result<Id> {
        get(&self.eval, "eval", p(y, z))
    }
}

/// Fails with an engine-bug error when a derived identity does not hold.
pub(crate) fn derived(law: &str, site: &[&str], lhs: &str, rhs: &str) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::EngineBug {
            law: law.to_string(),
            site: site.iter().map(|s| s.to_string()).collect(),
            detail: format!("{lhs} != {rhs}"),
        })
    }
}

pub(crate) fn typed(cat: &FinCategory, f: &str, src: &str, dst: &str) -> Result<bool> {
    let a = cat.arrow(f)?;
    Ok(a.src == src && a.dst == dst)
}

fn type_report(cat: &FinCategory, law: &str, site: &[&str], f: &str, src: &str, dst: &str) -> Result<Option<CheckReport>> {
    if typed(cat, f, src, dst)? {
        return Ok(None);
    }
    let a = cat.arrow(f)?;
    Ok(Some(CheckReport::mismatch(law, site, &format!("{}->{}", a.src, a.dst), &format!("{src}->{dst}"))))
}

/// Empty iff the base is a category, `⊗` is a bifunctor, `a, l, r` are
/// natural isomorphisms and the pentagon and triangle commute.
pub fn check_monoidal(m: &MonoidalData) -> Result<Vec<CheckReport>> {
    let cat = &m.base;
    let base = validate_category(cat)?;
    if !base.is_empty() {
        return Ok(base);
    }
    let mut r = Reports::default();
    if !cat.objects.contains(&m.unit) {
        return Err(Error::MalformedReference { table: "unit".into(), id: m.unit.clone() });
    }
    let obs = m.objects();
    let mors = m.morphisms();
    let i = m.unit.as_str();
    for &x in &obs {
        for &y in &obs {
            let xy = m.t(x, y)?;
            if !cat.objects.contains(&xy) {
                return Err(Error::MalformedReference { table: "tensorObj".into(), id: xy });
            }
        }
    }
    for &f in &mors {
        for &g in &mors {
            let h = m.tm(f, g)?;
            let (s, d) = (m.t(cat.src(f)?, cat.src(g)?)?, m.t(cat.dst(f)?, cat.dst(g)?)?);
            if let Some(rep) = type_report(cat, "monoidal.bifunctor", &[f, g], &h, &s, &d)? {
                r.push(rep);
            }
        }
    }
    for &x in &obs {
        for &y in &obs {
            let z = m.t(x, y)?;
            for &w in &obs {
                let a = m.a(x, y, w)?;
                if let Some(rep) = type_report(cat, "monoidal.iso", &[x, y, w], &a, &m.t(&z, w)?, &m.t(x, &m.t(y, w)?)?)? {
                    r.push(rep);
                }
            }
        }
        if let Some(rep) = type_report(cat, "monoidal.iso", &["l", x], &m.l(x)?, &m.t(i, x)?, x)? {
            r.push(rep);
        }
        if let Some(rep) = type_report(cat, "monoidal.iso", &["r", x], &m.r(x)?, &m.t(x, i)?, x)? {
            r.push(rep);
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    for &x in &obs {
        for &y in &obs {
            r.eq("monoidal.bifunctor", &[x, y], &m.tm(cat.id(x)?, cat.id(y)?)?, cat.id(&m.t(x, y)?)?);
        }
    }
    let pairs = cat.composable_pairs();
    for &(f, f2) in &pairs {
        for &(g, g2) in &pairs {
            let lhs = m.tm(&cat.comp(f, f2)?, &cat.comp(g, g2)?)?;
            let rhs = m.seq(&[m.tm(f, g)?, m.tm(f2, g2)?])?;
            r.eq("monoidal.bifunctor", &[f, f2, g, g2], &lhs, &rhs);
        }
    }
    for &x in &obs {
        for &y in &obs {
            for &z in &obs {
                let a = m.a(x, y, z)?;
                if morphism_inverse(cat, &a)?.is_none() {
                    r.push(CheckReport::count("monoidal.iso", &["a", x, y, z], 0));
                }
            }
        }
        for (name, c) in [("l", m.l(x)?), ("r", m.r(x)?)] {
            if morphism_inverse(cat, &c)?.is_none() {
                r.push(CheckReport::count("monoidal.iso", &[name, x], 0));
            }
        }
    }
    for &f in &mors {
        let (x, x2) = (cat.src(f)?, cat.dst(f)?);
        for &g in &mors {
            let (y, y2) = (cat.src(g)?, cat.dst(g)?);
            for &h in &mors {
                let (z, z2) = (cat.src(h)?, cat.dst(h)?);
                let lhs = m.seq(&[m.tm(&m.tm(f, g)?, h)?, m.a(x2, y2, z2)?])?;
                let rhs = m.seq(&[m.a(x, y, z)?, m.tm(f, &m.tm(g, h)?)?])?;
                r.eq("monoidal.naturality", &["a", f, g, h], &lhs, &rhs);
            }
        }
        let lhs = m.seq(&[m.lid(i, f)?, m.l(x2)?])?;
        let rhs = m.seq(&[m.l(x)?, f.to_string()])?;
        r.eq("monoidal.naturality", &["l", f], &lhs, &rhs);
        let lhs = m.seq(&[m.rid(f, i)?, m.r(x2)?])?;
        let rhs = m.seq(&[m.r(x)?, f.to_string()])?;
        r.eq("monoidal.naturality", &["r", f], &lhs, &rhs);
    }
    for &w in &obs {
        for &x in &obs {
            let wx = m.t(w, x)?;
            for &y in &obs {
                let xy = m.t(x, y)?;
                for &z in &obs {
                    let lhs = m.seq(&[m.a(&wx, y, z)?, m.a(w, x, &m.t(y, z)?)?])?;
                    let rhs = m.seq(&[m.rid(&m.a(w, x, y)?, z)?, m.a(w, &xy, z)?, m.lid(w, &m.a(x, y, z)?)?])?;
                    r.eq("pentagon", &[w, x, y, z], &lhs, &rhs);
                }
            }
        }
    }
    for &x in &obs {
        for &y in &obs {
            let lhs = m.seq(&[m.a(x, i, y)?, m.lid(x, &m.l(y)?)?])?;
            let rhs = m.rid(&m.r(x)?, y)?;
            r.eq("triangle", &[x, y], &lhs, &rhs);
        }
    }
    if r.is_empty() {
        derived("derived.rI-lI", &[i], &m.r(i)?, &m.l(i)?)?;
        for &x in &obs {
            for &y in &obs {
                let lhs = m.seq(&[m.a(i, x, y)?, m.l(&m.t(x, y)?)?])?;
                derived("derived.left-unit-assoc", &[x, y], &lhs, &m.rid(&m.l(x)?, y)?)?;
            }
        }
    }
    Ok(r.finish())
}

/// Empty iff `c` is natural, self-inverse, and satisfies the hexagon and
/// unit diagrams.
pub fn check_symmetry(m: &MonoidalData, s: &SymmetryData) -> Result<Vec<CheckReport>> {
    let cat = &m.base;
    let obs = m.objects();
    let i = m.unit.as_str();
    let mut r = Reports::default();
    for &x in &obs {
        for &y in &obs {
            let c = s.c(x, y)?;
            if let Some(rep) = type_report(cat, "symmetry.naturality", &[x, y], &c, &m.t(x, y)?, &m.t(y, x)?)? {
                r.push(rep);
            }
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    let mors = m.morphisms();
    for &f in &mors {
        for &g in &mors {
            let lhs = m.seq(&[m.tm(f, g)?, s.c(cat.dst(f)?, cat.dst(g)?)?])?;
            let rhs = m.seq(&[s.c(cat.src(f)?, cat.src(g)?)?, m.tm(g, f)?])?;
            r.eq("symmetry.naturality", &[f, g], &lhs, &rhs);
        }
    }
    for &x in &obs {
        for &y in &obs {
            let lhs = m.seq(&[s.c(x, y)?, s.c(y, x)?])?;
            r.eq("symmetry.invol", &[x, y], &lhs, &m.id(&m.t(x, y)?)?);
            for &z in &obs {
                let lhs = m.seq(&[m.a(x, y, z)?, s.c(x, &m.t(y, z)?)?, m.a(y, z, x)?])?;
                let rhs = m.seq(&[m.rid(&s.c(x, y)?, z)?, m.a(y, x, z)?, m.lid(y, &s.c(x, z)?)?])?;
                r.eq("symmetry.hexagon", &[x, y, z], &lhs, &rhs);
            }
        }
        let lhs = m.seq(&[s.c(i, x)?, m.r(x)?])?;
        r.eq("symmetry.unit", &[x], &lhs, &m.l(x)?);
    }
    Ok(r.finish())
}

/// `π⁻¹(g) = ε_{y,z} ∘ (g ⊗ 1_y)` for `g: X → V̄(y, z)`.
pub fn transpose_pi_inv(m: &MonoidalData, cl: &ClosedData, y: &str, z: &str, g: &str) -> Result<Id> {
    m.seq(&[m.rid(g, y)?, cl.ev(y, z)?])
}

/// The unique `g: x → V̄(y, Z)` with `π⁻¹(g) = f`, for `f: x ⊗ y → Z`.
pub fn transpose_pi(m: &MonoidalData, cl: &ClosedData, x: &str, y: &str, f: &str) -> Result<Id> {
    let z = m.dst(f)?;
    let xy = m.t(x, y)?;
    if m.base.src(f)? != xy {
        return Err(Error::ShapeMismatch(format!("transpose of {f}: source is not {x}⊗{y}")));
    }
    let mut found = Vec::new();
    for g in m.base.hom(x, &cl.hom(y, &z)?) {
        if transpose_pi_inv(m, cl, y, &z, g)? == f {
            found.push(g);
        }
    }
    match found.as_slice() {
        [g] => Ok(g.to_string()),
        _ => Err(Error::witness("transpose", &[x, y, f], found.len())),
    }
}

/// `V̄(f, h): V̄(X, Z) → V̄(X', Z')` for `f: X' → X`, `h: Z → Z'`, as
/// `V̄(f, Z') ∘ V̄(X, h)`.
pub fn hom_on_morphisms(m: &MonoidalData, cl: &ClosedData, f: &str, h: &str) -> Result<Id> {
    let (x2, x) = (m.src(f)?, m.dst(f)?);
    let (z, z2) = (m.src(h)?, m.dst(h)?);
    let vxz = cl.hom(&x, &z)?;
    let right = transpose_pi(m, cl, &vxz, &x, &m.seq(&[cl.ev(&x, &z)?, h.to_string()])?)?;
    let vxz2 = cl.hom(&x, &z2)?;
    let left = transpose_pi(m, cl, &vxz2, &x2, &m.seq(&[m.lid(&vxz2, f)?, cl.ev(&x, &z2)?])?)?;
    m.seq(&[right, left])
}

/// `V̄(−,−)` as a functor `V^op × V → V`.
pub fn hom_bifunctor(m: &MonoidalData, cl: &ClosedData) -> Result<Bifunctor> {
    let mut bf = Bifunctor::default();
    for x in m.objects() {
        for z in m.objects() {
            bf.on_objects.insert(p(x, z), cl.hom(x, z)?);
        }
    }
    for f in m.morphisms() {
        for h in m.morphisms() {
            bf.on_morphisms.insert(p(f, h), hom_on_morphisms(m, cl, f, h)?);
        }
    }
    Ok(bf)
}

/// `b̄_{x,y,z}: V̄(y,z) ⊗ V̄(x,y) → V̄(x,z)`, the transpose of
/// `ε_z ∘ (1 ⊗ ε_y) ∘ a`.
pub fn internal_composition_b(m: &MonoidalData, cl: &ClosedData, x: &str, y: &str, z: &str) -> Result<Id> {
    let (vyz, vxy) = (cl.hom(y, z)?, cl.hom(x, y)?);
    let f = m.seq(&[m.a(&vyz, &vxy, x)?, m.lid(&vyz, &cl.ev(x, y)?)?, cl.ev(y, z)?])?;
    transpose_pi(m, cl, &m.t(&vyz, &vxy)?, x, &f)
}

/// `ϖ(f) = π(f ∘ l_X): I → V̄(X, Y)`.
pub fn varpi(m: &MonoidalData, cl: &ClosedData, f: &str) -> Result<Id> {
    let x = m.src(f)?;
    transpose_pi(m, cl, &m.unit, &x, &m.seq(&[m.l(&x)?, f.to_string()])?)
}

/// Inverse of `ϖ` for `u: I → V̄(x, y)`.
pub fn varpi_inv(m: &MonoidalData, cl: &ClosedData, x: &str, y: &str, u: &str) -> Result<Id> {
    m.seq(&[m.inv(&m.l(x)?)?, transpose_pi_inv(m, cl, x, y, u)?])
}

/// `π̄_{x,y,z}: V̄(x⊗y, z) → V̄(x, V̄(y, z))`, computed as `π(π(ε ∘ a))` and
/// verified against its characterization for every test object `W`.
pub fn internal_pi_bar(m: &MonoidalData, cl: &ClosedData, x: &str, y: &str, z: &str) -> Result<Id> {
    let xy = m.t(x, y)?;
    let w0 = cl.hom(&xy, z)?;
    let w0x = m.t(&w0, x)?;
    let inner = transpose_pi(m, cl, &w0x, y, &m.seq(&[m.a(&w0, x, y)?, cl.ev(&xy, z)?])?)?;
    let pb = transpose_pi(m, cl, &w0, x, &inner)?;
    for w in m.objects() {
        let wx = m.t(w, x)?;
        for h in m.base.hom(&m.t(w, &xy)?, z) {
            let lhs = m.seq(&[transpose_pi(m, cl, w, &xy, h)?, pb.clone()])?;
            let ah = m.seq(&[m.a(w, x, y)?, h.to_string()])?;
            let rhs = transpose_pi(m, cl, w, x, &transpose_pi(m, cl, &wx, y, &ah)?)?;
            derived("derived.pi-bar", &[x, y, z, w, h], &lhs, &rhs)?;
        }
    }
    Ok(pb)
}

/// `i_x = π(r_x): x → V̄(I, x)`.
pub fn iota(m: &MonoidalData, cl: &ClosedData, x: &str) -> Result<Id> {
    transpose_pi(m, cl, x, &m.unit, &m.r(x)?)
}

/// V as a V-structure over itself: `S̄ = V̄`, `b̄` internal composition,
/// `φ = ϖ`.
pub fn self_vstructure(m: &MonoidalData, cl: &ClosedData) -> Result<VStructureData> {
    let obs = m.objects();
    let mut comp = BTreeMap::new();
    for &x in &obs {
        for &y in &obs {
            for &z in &obs {
                comp.insert(t(x, y, z), internal_composition_b(m, cl, x, y, z)?);
            }
        }
    }
    let mut phi = BTreeMap::new();
    for f in m.morphisms() {
        phi.insert(f.to_string(), varpi(m, cl, f)?);
    }
    Ok(VStructureData { base_s: m.base.clone(), base_v: m.clone(), hom: hom_bifunctor(m, cl)?, comp, phi })
}

/// `(K⊗L, π(1_{K⊗L}), π̄)`.
pub fn self_cylinder(m: &MonoidalData, cl: &ClosedData) -> Result<CylinderAssignment> {
    let obs = m.objects();
    let mut cyl = CylinderAssignment::default();
    for &k in &obs {
        for &l in &obs {
            let kl = m.t(k, l)?;
            cyl.alpha.insert(p(k, l), transpose_pi(m, cl, k, l, &m.id(&kl)?)?);
            cyl.tensor_obj.insert(p(k, l), kl);
            for &n in &obs {
                cyl.phibar.insert(t(k, l, n), internal_pi_bar(m, cl, k, l, n)?);
            }
        }
    }
    Ok(cyl)
}

/// `K⋔L = V̄(K,L)`, `β = π(ε ∘ c)`, `ψ̄_{K,L,M} = π̄_{K,M,L} ∘ V̄(c_{K,M}, L) ∘ π̄_{M,K,L}⁻¹`.
pub fn self_path(m: &MonoidalData, cl: &ClosedData, s: &SymmetryData) -> Result<PathAssignment> {
    let obs = m.objects();
    let mut pth = PathAssignment::default();
    for &k in &obs {
        for &l in &obs {
            let kl = cl.hom(k, l)?;
            let f = m.seq(&[s.c(k, &kl)?, cl.ev(k, l)?])?;
            pth.beta.insert(p(k, l), transpose_pi(m, cl, k, &kl, &f)?);
            pth.path_obj.insert(p(k, l), kl);
            for &n in &obs {
                let swap = hom_on_morphisms(m, cl, &s.c(k, n)?, &m.id(l)?)?;
                let g = m.seq(&[m.inv(&internal_pi_bar(m, cl, n, k, l)?)?, swap, internal_pi_bar(m, cl, k, n, l)?])?;
                pth.psibar.insert(t(k, l, n), g);
            }
        }
    }
    Ok(pth)
}

/// Empty iff the transpose `g ↦ ε ∘ (g ⊗ 1)` is a bijection
/// `Hom(X, V̄(Y,Z)) → Hom(X⊗Y, Z)` for all `X, Y, Z`. The derived lemmas
/// are then evaluated; a failure there is an engine bug.
pub fn check_closed(m: &MonoidalData, cl: &ClosedData) -> Result<Vec<CheckReport>> {
    let cat = &m.base;
    let obs = m.objects();
    let mut r = Reports::default();
    for &y in &obs {
        for &z in &obs {
            let v = cl.hom(y, z)?;
            if !cat.objects.contains(&v) {
                return Err(Error::MalformedReference { table: "homObj".into(), id: v });
            }
            let e = cl.ev(y, z)?;
            if let Some(rep) = type_report(cat, "closed.typing", &[y, z], &e, &m.t(&v, y)?, z)? {
                r.push(rep);
            }
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    for &x in &obs {
        for &y in &obs {
            for &z in &obs {
                let mut counts: BTreeMap<Id, usize> =
                    cat.hom(&m.t(x, y)?, z).into_iter().map(|f| (f.to_string(), 0)).collect();
                for g in cat.hom(x, &cl.hom(y, z)?) {
                    *counts.entry(transpose_pi_inv(m, cl, y, z, g)?).or_default() += 1;
                }
                if let Some((f, n)) = counts.iter().find(|(_, n)| **n != 1) {
                    r.push(CheckReport::count("closed.bijection", &[x, y, z, f], *n));
                }
            }
        }
    }
    if r.is_empty() {
        closed_derived(m, cl)?;
    }
    Ok(r.finish())
}

fn closed_derived(m: &MonoidalData, cl: &ClosedData) -> Result<()> {
    let cat = &m.base;
    let obs = m.objects();
    let mors = m.morphisms();
    let bf = hom_bifunctor(m, cl)?;
    if let Some(rep) = check_bifunctor(&opposite_category(cat), cat, cat, &bf)?.first() {
        return Err(Error::EngineBug {
            law: "derived.hom-bifunctor".into(),
            site: rep.site.clone(),
            detail: rep.law.clone(),
        });
    }
    for &f in &mors {
        let (x, y) = (m.src(f)?, m.dst(f)?);
        for &z in &obs {
            let idz = m.id(z)?;
            let vfz = bf.mor(f, &idz)?;
            let lhs = m.seq(&[m.rid(vfz, &x)?, cl.ev(&x, z)?])?;
            let rhs = m.seq(&[m.lid(&cl.hom(&y, z)?, f)?, cl.ev(&y, z)?])?;
            derived("derived.eval-dinatural", &[f, z], &lhs, &rhs)?;
            // π natural in Y: π(h ∘ (1 ⊗ f)) = V̄(f, Z) ∘ π(h)
            for &w in &obs {
                for h in cat.hom(&m.t(w, &y)?, z) {
                    let lhs = transpose_pi(m, cl, w, &x, &m.seq(&[m.lid(w, f)?, h.to_string()])?)?;
                    let rhs = m.seq(&[transpose_pi(m, cl, w, &y, h)?, vfz.to_string()])?;
                    derived("derived.pi-natural-y", &[w, f, h], &lhs, &rhs)?;
                }
            }
        }
        let lhs = transpose_pi(m, cl, &x, &m.unit, &m.seq(&[m.r(&x)?, f.to_string()])?)?;
        let rhs = m.seq(&[f.to_string(), iota(m, cl, &y)?])?;
        derived("derived.unit-transpose", &[f], &lhs, &rhs)?;
        derived("derived.varpi-inverse", &[f], &varpi_inv(m, cl, &x, &y, &varpi(m, cl, f)?)?, f)?;
    }
    for &x in &obs {
        for &y in &obs {
            let xy = m.t(x, y)?;
            for &z in &obs {
                let pb = internal_pi_bar(m, cl, x, y, z)?;
                for f in cat.hom(&xy, z) {
                    let lhs = m.seq(&[varpi(m, cl, f)?, pb.clone()])?;
                    let rhs = varpi(m, cl, &transpose_pi(m, cl, x, y, f)?)?;
                    derived("derived.pi-bar-varpi", &[x, y, z, f], &lhs, &rhs)?;
                }
                // transpose of π̄⁻¹ is ε ∘ (ε ⊗ 1) ∘ a⁻¹
                let w = cl.hom(x, &cl.hom(y, z)?)?;
                let lhs = transpose_pi_inv(m, cl, &xy, z, &m.inv(&pb)?)?;
                let rhs = m.seq(&[m.inv(&m.a(&w, x, y)?)?, m.rid(&cl.ev(x, &cl.hom(y, z)?)?, y)?, cl.ev(y, z)?])?;
                derived("derived.pi-bar-inverse", &[x, y, z], &lhs, &rhs)?;
            }
        }
    }
    Ok(())
}
