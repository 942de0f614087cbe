//! Left V-modules, tensor-closed and closed modules, comodules and closed
//! bimodules, with the structure they induce.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{check_bifunctor, inverse, morphism_inverse, opposite_category, validate_category, Bifunctor, FinCategory};
use crate::monoidal::{
    derived, hom_on_morphisms, internal_composition_b, internal_pi_bar, transpose_pi, typed, varpi,
    ClosedData, MonoidalData, SymmetryData,
};
use crate::report::{CheckReport, Reports};
use crate::tables::{entries, p, t, Triple};
use crate::vstruct::{opposite_vstructure, VStructureData};
use crate::Id;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VModuleData {
    pub base_v: MonoidalData,
    pub base_s: FinCategory,
    /// `− ⊗ −: V × S → S`
    pub action: Bifunctor,
    /// `a_{K,L,X}: (K⊗L)⊗X → K⊗(L⊗X)`
    #[serde(with = "entries")]
    pub assoc: BTreeMap<Triple, Id>,
    /// `l_X: I⊗X → X`
    #[serde(with = "entries")]
    pub lunit: BTreeMap<Id, Id>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TensorClosedModuleData {
    pub module: VModuleData,
    /// `S̄: S^op × S → V`
    pub hom: Bifunctor,
    /// `φ_{K,X,Y}: S(K⊗X, Y) → V(K, S̄(X,Y))`, keyed by `(K, X, f)`.
    #[serde(with = "entries")]
    pub phi: BTreeMap<Triple, Id>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedVModuleData {
    pub tensor_closed: TensorClosedModuleData,
    /// `− ⋔ −: V × S^op → S^op`
    pub cotensor: Bifunctor,
    /// `ψ_{K,X,Y}: S(Y, K⋔X) → V(K, S̄(Y,X))`, keyed by `(K, X, f)`.
    #[serde(with = "entries")]
    pub psi: BTreeMap<Triple, Id>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedBimoduleData {
    pub closed_module: ClosedVModuleData,
    /// `a^op_{K,L,X}: K⋔(L⋔X) → (K⊗L)⋔X` in `S`
    #[serde(with = "entries")]
    pub assoc_op: BTreeMap<Triple, Id>,
    /// `l^op_X: X → I⋔X` in `S`
    #[serde(with = "entries")]
    pub lunit_op: BTreeMap<Id, Id>,
}

/// `(−⊗X)_{K,L}: V̄(K,L) → S̄(K⊗X, L⊗X)` keyed by `(K, L, X)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnrichedActionData {
    #[serde(with = "entries")]
    pub components: BTreeMap<Triple, Id>,
}

fn get<K: Ord + std::fmt::Debug>(map: &BTreeMap<K, Id>, table: &str, k: K) -> Result<Id> {
    map.get(&k).cloned().ok_or_else(|| Error::missing(table, k))
}

fn single(what: &str, site: &[&str], found: Vec<&str>) -> Result<Id> {
    match found.as_slice() {
        [f] => Ok(f.to_string()),
        _ => Err(Error::witness(what, site, found.len())),
    }
}

/// Confirms that `expected` is the only candidate passing `ok`.
pub(crate) fn confirm_unique<F>(what: &str, site: &[&str], candidates: Vec<&str>, expected: &str, ok: F) -> Result<()>
where
    F: Fn(&str) -> Result<bool>,
{
    let mut found = Vec::new();
    for c in candidates {
        if ok(c)? {
            found.push(c);
        }
    }
    if found != [expected] {
        return Err(Error::witness(what, site, found.len()));
    }
    Ok(())
}

fn relabel(reports: Vec<CheckReport>, from: &str, to: &str) -> Vec<CheckReport> {
    reports
        .into_iter()
        .map(|r| match r.law.strip_prefix(from) {
            Some(rest) => CheckReport { law: format!("{to}{rest}"), ..r },
            None => r,
        })
        .collect()
}

fn is_structural(r: &CheckReport) -> bool {
    r.law.starts_with("category.") || r.law.ends_with(".functor") || r.law.ends_with(".typing") || r.law.ends_with(".iso")
        || r.law.ends_with(".bijection") || r.law.starts_with("functor.")
}

impl VModuleData {
    pub fn objects(&self) -> Vec<&str> {
        self.base_s.objects.iter().map(|s| s.as_str()).collect()
    }

    /// `K ⊗ X`
    pub fn t(&self, k: &str, x: &str) -> Result<Id> {
        Ok(self.action.obj(k, x)?.to_string())
    }

    /// `u ⊗ f`
    pub fn tm(&self, u: &str, f: &str) -> Result<Id> {
        Ok(self.action.mor(u, f)?.to_string())
    }

    /// `u ⊗ 1_X`
    pub fn tu(&self, u: &str, x: &str) -> Result<Id> {
        self.tm(u, self.base_s.id(x)?)
    }

    /// `1_K ⊗ f`
    pub fn tf(&self, k: &str, f: &str) -> Result<Id> {
        self.tm(&self.base_v.id(k)?, f)
    }

    pub fn a(&self, k: &str, l: &str, x: &str) -> Result<Id> {
        get(&self.assoc, "assoc", t(k, l, x))
    }

    pub fn l(&self, x: &str) -> Result<Id> {
        get(&self.lunit, "lunit", x.to_string())
    }
}

impl TensorClosedModuleData {
    fn s(&self) -> &FinCategory {
        &self.module.base_s
    }

    fn v(&self) -> &MonoidalData {
        &self.module.base_v
    }

    pub fn h(&self, x: &str, y: &str) -> Result<Id> {
        Ok(self.hom.obj(x, y)?.to_string())
    }

    pub fn phi(&self, k: &str, x: &str, f: &str) -> Result<Id> {
        get(&self.phi, "phi", t(k, x, f))
    }

    /// `φ⁻¹_{K,X,Y}(u)`
    pub fn phi_inv(&self, k: &str, x: &str, y: &str, u: &str) -> Result<Id> {
        let kx = self.module.t(k, x)?;
        let found = self.s().hom(&kx, y).into_iter().filter(|f| self.phi.get(&t(k, x, f)).map(|v| v == u).unwrap_or(false)).collect();
        single("phi inverse", &[k, x, y, u], found)
    }

    /// `η_K = φ(1_{K⊗X})`
    pub fn eta(&self, k: &str, x: &str) -> Result<Id> {
        self.phi(k, x, self.s().id(&self.module.t(k, x)?)?)
    }

    /// `ε_Y = φ⁻¹(1_{S̄(X,Y)}): S̄(X,Y) ⊗ X → Y`
    pub fn eps(&self, x: &str, y: &str) -> Result<Id> {
        let h = self.h(x, y)?;
        self.phi_inv(&h, x, y, &self.v().id(&h)?)
    }
}

impl ClosedVModuleData {
    pub fn cot(&self, k: &str, x: &str) -> Result<Id> {
        Ok(self.cotensor.obj(k, x)?.to_string())
    }

    pub fn psi(&self, k: &str, x: &str, f: &str) -> Result<Id> {
        get(&self.psi, "psi", t(k, x, f))
    }

    /// `ψ⁻¹_{K,X,Y}(u)`
    pub fn psi_inv(&self, k: &str, x: &str, y: &str, u: &str) -> Result<Id> {
        let kx = self.cot(k, x)?;
        let s = &self.tensor_closed.module.base_s;
        let found = s.hom(y, &kx).into_iter().filter(|f| self.psi.get(&t(k, x, f)).map(|v| v == u).unwrap_or(false)).collect();
        single("psi inverse", &[k, x, y, u], found)
    }
}

impl ClosedBimoduleData {
    pub fn a_op(&self, k: &str, l: &str, x: &str) -> Result<Id> {
        get(&self.assoc_op, "assocOp", t(k, l, x))
    }

    pub fn l_op(&self, x: &str) -> Result<Id> {
        get(&self.lunit_op, "lunitOp", x.to_string())
    }
}

fn type_check(r: &mut Reports, cat: &FinCategory, law: &str, site: &[&str], f: &str, s: &str, d: &str) -> Result<bool> {
    if typed(cat, f, s, d)? {
        return Ok(true);
    }
    let a = cat.arrow(f)?;
    r.push(CheckReport::mismatch(law, site, &format!("{}->{}", a.src, a.dst), &format!("{s}->{d}")));
    Ok(false)
}

/// Empty iff the action is a bifunctor, `a` and `l` are natural
/// isomorphisms and the associativity and unit diagrams commute.
pub fn check_vmodule(md: &VModuleData) -> Result<Vec<CheckReport>> {
    let (m, s) = (&md.base_v, &md.base_s);
    let base = validate_category(s)?;
    if !base.is_empty() {
        return Ok(base);
    }
    let mut r = Reports::default();
    for rep in check_bifunctor(&m.base, s, s, &md.action)? {
        r.push(CheckReport { law: format!("module.{}", rep.law), ..rep });
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    let (obs, vobs) = (md.objects(), m.objects());
    for &k in &vobs {
        for &l in &vobs {
            for &x in &obs {
                let a = md.a(k, l, x)?;
                if type_check(&mut r, s, "module.typing", &[k, l, x], &a, &md.t(&m.t(k, l)?, x)?, &md.t(k, &md.t(l, x)?)?)?
                    && morphism_inverse(s, &a)?.is_none()
                {
                    r.push(CheckReport::count("module.iso", &[k, l, x], 0));
                }
            }
        }
    }
    for &x in &obs {
        let l = md.l(x)?;
        if type_check(&mut r, s, "module.typing", &[x], &l, &md.t(&m.unit, x)?, x)? && morphism_inverse(s, &l)?.is_none() {
            r.push(CheckReport::count("module.iso", &[x], 0));
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    // naturality, one variable at a time
    for (u, ua) in &m.base.morphisms {
        let (k, k2) = (ua.src.as_str(), ua.dst.as_str());
        for &l in &vobs {
            let il = m.id(l)?;
            for &x in &obs {
                let lhs = s.path(&[md.a(k, l, x)?, md.tu(u, &md.t(l, x)?)?])?;
                let rhs = s.path(&[md.tu(&m.tm(u, &il)?, x)?, md.a(k2, l, x)?])?;
                r.eq("module.naturality", &[u, l, x], &lhs, &rhs);
                let lhs = s.path(&[md.a(l, k, x)?, md.tf(l, &md.tu(u, x)?)?])?;
                let rhs = s.path(&[md.tu(&m.tm(&il, u)?, x)?, md.a(l, k2, x)?])?;
                r.eq("module.naturality", &[l, u, x], &lhs, &rhs);
            }
        }
    }
    for (f, fa) in &s.morphisms {
        let (x, x2) = (fa.src.as_str(), fa.dst.as_str());
        for &k in &vobs {
            for &l in &vobs {
                let lhs = s.path(&[md.a(k, l, x)?, md.tf(k, &md.tf(l, f)?)?])?;
                let rhs = s.path(&[md.tf(&m.t(k, l)?, f)?, md.a(k, l, x2)?])?;
                r.eq("module.naturality", &[k, l, f], &lhs, &rhs);
            }
        }
        let lhs = s.path(&[md.l(x)?, f.clone()])?;
        let rhs = s.path(&[md.tf(&m.unit, f)?, md.l(x2)?])?;
        r.eq("module.naturality", &[f], &lhs, &rhs);
    }
    for &k in &vobs {
        for &l in &vobs {
            for &n in &vobs {
                for &x in &obs {
                    let kl = m.t(k, l)?;
                    let top = s.path(&[md.a(&kl, n, x)?, md.a(k, l, &md.t(n, x)?)?])?;
                    let bottom = s.path(&[
                        md.tu(&m.a(k, l, n)?, x)?,
                        md.a(k, &m.t(l, n)?, x)?,
                        md.tf(k, &md.a(l, n, x)?)?,
                    ])?;
                    r.eq("module.assoc", &[k, l, n, x], &top, &bottom);
                }
            }
        }
        for &x in &obs {
            let lhs = s.path(&[md.a(k, &m.unit, x)?, md.tf(k, &md.l(x)?)?])?;
            r.eq("module.unit", &[k, x], &lhs, &md.tu(&m.r(k)?, x)?);
        }
    }
    if r.is_empty() {
        for &k in &vobs {
            for &x in &obs {
                let lhs = s.path(&[s.path(&[inverse(s, &md.a(&m.unit, k, x)?)?])?, md.tu(&m.l(k)?, x)?])?;
                derived("derived.module-left-unit", &[k, x], &lhs, &md.l(&md.t(k, x)?)?)?;
            }
        }
    }
    Ok(r.finish())
}

/// `check_vmodule` plus: `S̄` a bifunctor, every `φ_{K,X,Y}` a bijection,
/// natural in `K`, `X` and `Y`.
pub fn check_tensor_closed(tc: &TensorClosedModuleData) -> Result<Vec<CheckReport>> {
    let md = &tc.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let mut r = Reports(check_vmodule(md)?);
    if r.0.iter().any(is_structural) {
        return Ok(r.finish());
    }
    for rep in check_bifunctor(&opposite_category(s), s, &m.base, &tc.hom)? {
        r.push(CheckReport { law: format!("moduleclosed.{}", rep.law), ..rep });
    }
    let (obs, vobs) = (md.objects(), m.objects());
    for &k in &vobs {
        for &x in &obs {
            let kx = md.t(k, x)?;
            for &y in &obs {
                let target = tc.h(x, y)?;
                let mut hit: BTreeMap<&str, usize> = m.base.hom(k, &target).into_iter().map(|u| (u, 0)).collect();
                for f in s.hom(&kx, y) {
                    let u = tc.phi(k, x, f)?;
                    match hit.get_mut(u.as_str()) {
                        Some(n) => *n += 1,
                        None => r.push(CheckReport::mismatch("moduleclosed.typing", &[k, x, f], &u, &format!("{k}->{target}"))),
                    }
                }
                if let Some((u, n)) = hit.iter().find(|(_, n)| **n != 1) {
                    r.push(CheckReport::count("moduleclosed.bijection", &[k, x, y, u], *n));
                }
            }
        }
    }
    if r.0.iter().any(is_structural) {
        return Ok(r.finish());
    }
    for &k in &vobs {
        for &x in &obs {
            let kx = md.t(k, x)?;
            for &y in &obs {
                for f in s.hom(&kx, y) {
                    let phif = tc.phi(k, x, f)?;
                    for (u, ua) in m.base.morphisms.iter().filter(|(_, a)| a.dst == k) {
                        let lhs = tc.phi(&ua.src, x, &s.path(&[md.tu(u, x)?, f.to_string()])?)?;
                        r.eq("moduleclosed.naturality", &[u, x, f], &lhs, &m.seq(&[u.as_str(), &phif])?);
                    }
                    for (v, va) in s.morphisms.iter().filter(|(_, a)| a.dst == x) {
                        let lhs = tc.phi(k, &va.src, &s.path(&[md.tf(k, v)?, f.to_string()])?)?;
                        let rhs = m.seq(&[phif.clone(), tc.hom.mor(v, s.id(y)?)?.to_string()])?;
                        r.eq("moduleclosed.naturality", &[k, v, f], &lhs, &rhs);
                    }
                    for (g, _) in s.morphisms.iter().filter(|(_, a)| a.src == y) {
                        let lhs = tc.phi(k, x, &s.comp(f, g)?)?;
                        let rhs = m.seq(&[phif.clone(), tc.hom.mor(s.id(x)?, g)?.to_string()])?;
                        r.eq("moduleclosed.naturality", &[k, f, g], &lhs, &rhs);
                    }
                }
            }
        }
    }
    if r.is_empty() {
        // ε^Y_Z ∘ (1 ⊗ f) = ε^X_Z ∘ (S̄(f,Z) ⊗ 1)
        for (f, fa) in &s.morphisms {
            let (x, y) = (fa.src.as_str(), fa.dst.as_str());
            for &z in &obs {
                let lhs = s.path(&[md.tf(&tc.h(y, z)?, f)?, tc.eps(y, z)?])?;
                let rhs = s.path(&[md.tu(tc.hom.mor(f, s.id(z)?)?, x)?, tc.eps(x, z)?])?;
                derived("derived.counit-dinatural", &[f, z], &lhs, &rhs)?;
            }
        }
    }
    Ok(r.finish())
}

/// `check_tensor_closed` plus: `⋔` a bifunctor `V × S^op → S^op`, every
/// `ψ_{K,X,Y}` a bijection, natural in `K`, `X` and `Y`.
pub fn check_closed_module(cm: &ClosedVModuleData) -> Result<Vec<CheckReport>> {
    let tc = &cm.tensor_closed;
    let (m, s) = (&tc.module.base_v, &tc.module.base_s);
    let mut r = Reports(check_tensor_closed(tc)?);
    if r.0.iter().any(is_structural) {
        return Ok(r.finish());
    }
    let sop = opposite_category(s);
    for rep in check_bifunctor(&m.base, &sop, &sop, &cm.cotensor)? {
        r.push(CheckReport { law: format!("closedmodule.{}", rep.law), ..rep });
    }
    let (obs, vobs) = (tc.module.objects(), m.objects());
    for &k in &vobs {
        for &x in &obs {
            let kx = cm.cot(k, x)?;
            for &y in &obs {
                let target = tc.h(y, x)?;
                let mut hit: BTreeMap<&str, usize> = m.base.hom(k, &target).into_iter().map(|u| (u, 0)).collect();
                for f in s.hom(y, &kx) {
                    let u = cm.psi(k, x, f)?;
                    match hit.get_mut(u.as_str()) {
                        Some(n) => *n += 1,
                        None => r.push(CheckReport::mismatch("closedmodule.typing", &[k, x, f], &u, &format!("{k}->{target}"))),
                    }
                }
                if let Some((u, n)) = hit.iter().find(|(_, n)| **n != 1) {
                    r.push(CheckReport::count("closedmodule.bijection", &[k, x, y, u], *n));
                }
            }
        }
    }
    if r.0.iter().any(is_structural) {
        return Ok(r.finish());
    }
    for &k in &vobs {
        for &x in &obs {
            let kx = cm.cot(k, x)?;
            for &y in &obs {
                for f in s.hom(y, &kx) {
                    let psif = cm.psi(k, x, f)?;
                    for (u, ua) in m.base.morphisms.iter().filter(|(_, a)| a.dst == k) {
                        let g = s.path(&[f.to_string(), cm.cotensor.mor(u, s.id(x)?)?.to_string()])?;
                        let lhs = cm.psi(&ua.src, x, &g)?;
                        r.eq("closedmodule.naturality", &[u, x, f], &lhs, &m.seq(&[u.as_str(), &psif])?);
                    }
                    for (v, va) in s.morphisms.iter().filter(|(_, a)| a.src == x) {
                        let g = s.path(&[f.to_string(), cm.cotensor.mor(&m.id(k)?, v)?.to_string()])?;
                        let lhs = cm.psi(k, &va.dst, &g)?;
                        let rhs = m.seq(&[psif.clone(), tc.hom.mor(s.id(y)?, v)?.to_string()])?;
                        r.eq("closedmodule.naturality", &[k, v, f], &lhs, &rhs);
                    }
                    for (g, _) in s.morphisms.iter().filter(|(_, a)| a.dst == y) {
                        let lhs = cm.psi(k, x, &s.comp(g, f)?)?;
                        let rhs = m.seq(&[psif.clone(), tc.hom.mor(g, s.id(x)?)?.to_string()])?;
                        r.eq("closedmodule.naturality", &[k, g, f], &lhs, &rhs);
                    }
                }
            }
        }
    }
    Ok(r.finish())
}

/// Reads a module structure on `S` as a comodule structure on `S^op`, and
/// back: the tables are kept and the base category is reversed.
pub fn dualize_to_comodule(md: &VModuleData) -> VModuleData {
    VModuleData { base_s: opposite_category(&md.base_s), ..md.clone() }
}

/// The comodule tables `(⋔, a^op, l^op)` of a bimodule, carried on `S`.
pub fn comodule_of(cb: &ClosedBimoduleData) -> VModuleData {
    let cm = &cb.closed_module;
    VModuleData {
        base_v: cm.tensor_closed.module.base_v.clone(),
        base_s: cm.tensor_closed.module.base_s.clone(),
        action: cm.cotensor.clone(),
        assoc: cb.assoc_op.clone(),
        lunit: cb.lunit_op.clone(),
    }
}

/// The tensor-closed module on `S^op` given by `(⋔, a^op, l^op, S̄^op, ψ)`.
pub fn opposite_side(cb: &ClosedBimoduleData) -> TensorClosedModuleData {
    let tc = &cb.closed_module.tensor_closed;
    let mut hom = Bifunctor::default();
    for ((x, y), o) in &tc.hom.on_objects {
        hom.on_objects.insert(p(y, x), o.clone());
    }
    for ((f, g), o) in &tc.hom.on_morphisms {
        hom.on_morphisms.insert(p(g, f), o.clone());
    }
    TensorClosedModuleData { module: dualize_to_comodule(&comodule_of(cb)), hom, phi: cb.closed_module.psi.clone() }
}

/// `Θ_{K,Y,X} = ψ⁻¹ ∘ φ: S(K⊗Y, X) → S(Y, K⋔X)`
fn theta(cm: &ClosedVModuleData, k: &str, y: &str, x: &str, f: &str) -> Result<Id> {
    cm.psi_inv(k, x, y, &cm.tensor_closed.phi(k, y, f)?)
}

/// `Θ⁻¹ = φ⁻¹ ∘ ψ: S(Y, K⋔X) → S(K⊗Y, X)`
fn theta_inv(cm: &ClosedVModuleData, k: &str, y: &str, x: &str, g: &str) -> Result<Id> {
    cm.tensor_closed.phi_inv(k, y, x, &cm.psi(k, x, g)?)
}

/// Top-left route of the `a^op` square: `S(L⊗(K⊗Y), X) → S(Y, (K⊗L)⋔X)`.
fn aop_square_top(cm: &ClosedVModuleData, sym: &SymmetryData, k: &str, l: &str, y: &str, x: &str, f: &str) -> Result<Id> {
    let md = &cm.tensor_closed.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let g = s.path(&[md.tu(&sym.c(k, l)?, y)?, md.a(l, k, y)?, f.to_string()])?;
    theta(cm, &m.t(k, l)?, y, x, &g)
}

/// Empty iff both sides are tensor-closed modules, the comodule diagrams
/// commute, the opposite side carries the opposite V-structure, and the
/// three diagrams tying `φ`, `ψ`, `a^op` and `l^op` together commute.
pub fn check_closed_bimodule(cb: &ClosedBimoduleData, cl: &ClosedData, sym: &SymmetryData) -> Result<Vec<CheckReport>> {
    let cm = &cb.closed_module;
    let tc = &cm.tensor_closed;
    let md = &tc.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let mut r = Reports(check_closed_module(cm)?);
    if r.0.iter().any(is_structural) {
        return Ok(r.finish());
    }
    let dual = opposite_side(cb);
    r.extend(relabel(check_vmodule(&dual.module)?, "module.", "comodule."));
    if r.0.iter().any(is_structural) {
        return Ok(r.finish());
    }
    let (obs, vobs) = (md.objects(), m.objects());
    // the opposite side must carry the opposite V-structure
    let primal = opposite_vstructure(&induced_vstructure(tc)?, sym)?;
    let other = induced_vstructure(&dual)?;
    for (key, b) in &primal.comp {
        let site = [key.0.as_str(), &key.1, &key.2];
        r.eq("bimodule.opposite", &site, &other.b(&key.0, &key.1, &key.2)?, b);
    }
    for (f, u) in &primal.phi {
        r.eq("bimodule.opposite", &[f], &other.phi(f)?, u);
    }
    for &k in &vobs {
        for &l in &vobs {
            for &x in &obs {
                for &y in &obs {
                    let kx = md.t(k, x)?;
                    let ly = cm.cot(l, y)?;
                    let sxy = tc.h(x, y)?;
                    let one = m.seq(&[
                        module_phibar(tc, cl, k, x, &ly)?,
                        hom_on_morphisms(m, cl, &m.id(k)?, &module_phibar(&dual, cl, l, y, x)?)?,
                        m.inv(&internal_pi_bar(m, cl, k, l, &sxy)?)?,
                    ])?;
                    let other = m.seq(&[
                        module_phibar(&dual, cl, l, y, &kx)?,
                        hom_on_morphisms(m, cl, &m.id(l)?, &module_phibar(tc, cl, k, x, y)?)?,
                        m.inv(&internal_pi_bar(m, cl, l, k, &sxy)?)?,
                        hom_on_morphisms(m, cl, &sym.c(k, l)?, &m.id(&sxy)?)?,
                    ])?;
                    r.eq("bimodule.cp2-8-1", &[k, l, x, y], &one, &other);

                    let lky = md.t(l, &md.t(k, y)?)?;
                    for f in s.hom(&lky, x) {
                        let inner = theta(cm, l, &md.t(k, y)?, x, f)?;
                        let bottom = s.path(&[theta(cm, k, y, &cm.cot(l, x)?, &inner)?, cb.a_op(k, l, x)?])?;
                        let top = aop_square_top(cm, sym, k, l, y, x, f)?;
                        r.eq("bimodule.cp2-8-2", &[k, l, y, x, f], &top, &bottom);
                    }
                }
            }
        }
    }
    for &x in &obs {
        for &y in &obs {
            for f in s.hom(y, x) {
                let lhs = tc.phi(&m.unit, y, &s.path(&[md.l(y)?, f.to_string()])?)?;
                let rhs = cm.psi(&m.unit, x, &s.path(&[f.to_string(), cb.l_op(x)?])?)?;
                r.eq("bimodule.cp2-8-3", &[y, x, f], &lhs, &rhs);
            }
        }
    }
    Ok(r.finish())
}

/// `(η_K, ε_Y)` of the adjunction `− ⊗ X ⊣ S̄(X, −)`, with both triangle
/// identities checked.
pub fn module_eta_eps(tc: &TensorClosedModuleData, k: &str, x: &str, y: &str) -> Result<(Id, Id)> {
    let md = &tc.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let (eta, eps) = (tc.eta(k, x)?, tc.eps(x, y)?);
    let kx = md.t(k, x)?;
    let one = s.path(&[md.tu(&eta, x)?, tc.eps(x, &kx)?])?;
    derived("derived.triangle-identity", &[k, x], &one, s.id(&kx)?)?;
    let h = tc.h(x, y)?;
    let two = m.seq(&[tc.eta(&h, x)?, tc.hom.mor(s.id(x)?, &eps)?.to_string()])?;
    derived("derived.triangle-identity", &[x, y], &two, &m.id(&h)?)?;
    Ok((eta, eps))
}

/// `S̄`, `b̄ = φ(ε ∘ (1⊗ε) ∘ a)` and `φ_{X,Y} = φ_{I,X,Y} ∘ l_X^*`.
pub fn induced_vstructure(tc: &TensorClosedModuleData) -> Result<VStructureData> {
    let md = &tc.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let obs = md.objects();
    let mut comp = BTreeMap::new();
    for &x in &obs {
        for &y in &obs {
            let sxy = tc.h(x, y)?;
            for &z in &obs {
                let syz = tc.h(y, z)?;
                let f = s.path(&[md.a(&syz, &sxy, x)?, md.tf(&syz, &tc.eps(x, y)?)?, tc.eps(y, z)?])?;
                comp.insert(t(x, y, z), tc.phi(&m.t(&syz, &sxy)?, x, &f)?);
            }
        }
    }
    let mut phi = BTreeMap::new();
    for (f, fa) in &s.morphisms {
        phi.insert(f.clone(), tc.phi(&m.unit, &fa.src, &s.path(&[md.l(&fa.src)?, f.clone()])?)?);
    }
    Ok(VStructureData { base_s: s.clone(), base_v: m.clone(), hom: tc.hom.clone(), comp, phi })
}

/// `(−⊗X)_{K,L} = φ((ε_L ⊗ 1) ∘ a⁻¹)`, verified as a V-functor, against
/// `(−⊗X) ∘ ϖ(u) = φ(u⊗X)`, V-natural in `L`, with `ε` V-natural.
pub fn enriched_action(tc: &TensorClosedModuleData, cl: &ClosedData) -> Result<EnrichedActionData> {
    let md = &tc.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let (obs, vobs) = (md.objects(), m.objects());
    let mut ea = EnrichedActionData::default();
    for &k in &vobs {
        for &l in &vobs {
            let vkl = cl.hom(k, l)?;
            for &x in &obs {
                let f = s.path(&[inverse(s, &md.a(&vkl, k, x)?)?, md.tu(&cl.ev(k, l)?, x)?])?;
                ea.components.insert(t(k, l, x), tc.phi(&vkl, &md.t(k, x)?, &f)?);
            }
        }
    }
    let vs = induced_vstructure(tc)?;
    let c = |k: &str, l: &str, x: &str| get(&ea.components, "components", t(k, l, x));
    for &x in &obs {
        for &k in &vobs {
            let kx = md.t(k, x)?;
            let jk = varpi(m, cl, &m.id(k)?)?;
            let lhs = m.seq(&[jk, c(k, k, x)?])?;
            derived("derived.enriched-action-unit", &[k, x], &lhs, &vs.phi(s.id(&kx)?)?)?;
            for (u, ua) in m.base.morphisms.iter().filter(|(_, a)| a.src == k) {
                let l = ua.dst.as_str();
                let lhs = m.seq(&[varpi(m, cl, u)?, c(k, l, x)?])?;
                derived("derived.enriched-action-extends", &[u, x], &lhs, &vs.phi(&md.tu(u, x)?)?)?;
            }
            for &l in &vobs {
                let lx = md.t(l, x)?;
                for &n in &vobs {
                    let nx = md.t(n, x)?;
                    let (vln, vkl) = (cl.hom(l, n)?, cl.hom(k, l)?);
                    let lhs = m.seq(&[internal_composition_b(m, cl, k, l, n)?, c(k, n, x)?])?;
                    let rhs = m.seq(&[
                        m.lid(&vln, &c(k, l, x)?)?,
                        m.rid(&c(l, n, x)?, &tc.h(&kx, &lx)?)?,
                        vs.b(&kx, &lx, &nx)?,
                    ])?;
                    derived("derived.enriched-action-composition", &[k, l, n, x], &lhs, &rhs)?;
                    // V-naturality in L, as the transposed square
                    let s_kx = transpose_pi(m, cl, &tc.h(&lx, &nx)?, &tc.h(&kx, &lx)?, &vs.b(&kx, &lx, &nx)?)?;
                    let lhs = m.seq(&[
                        c(l, n, x)?,
                        s_kx,
                        hom_on_morphisms(m, cl, &c(k, l, x)?, &m.id(&tc.h(&kx, &nx)?)?)?,
                    ])?;
                    let v_k = transpose_pi(m, cl, &vln, &vkl, &internal_composition_b(m, cl, k, l, n)?)?;
                    let rhs = m.seq(&[v_k, hom_on_morphisms(m, cl, &m.id(&vkl)?, &c(k, n, x)?)?])?;
                    derived("derived.enriched-action-natural", &[k, l, n, x], &lhs, &rhs)?;
                }
            }
        }
        for &y in &obs {
            let sxy = tc.h(x, y)?;
            let sxyx = md.t(&sxy, x)?;
            for &z in &obs {
                let sxz = tc.h(x, z)?;
                let lhs = m.seq(&[
                    transpose_pi(m, cl, &tc.h(y, z)?, &sxy, &vs.b(x, y, z)?)?,
                    c(&sxy, &sxz, x)?,
                    tc.hom.mor(s.id(&sxyx)?, &tc.eps(x, z)?)?.to_string(),
                ])?;
                let rhs = tc.hom.mor(&tc.eps(x, y)?, s.id(z)?)?.to_string();
                derived("derived.enriched-action-counit", &[x, y, z], &lhs, &rhs)?;
            }
        }
    }
    Ok(ea)
}

/// `φ̄_{K,X,Y}: S̄(K⊗X, Y) → V̄(K, S̄(X,Y))`, the inverse of
/// `S̄(1, ε_Y) ∘ (−⊗X)_{K,S̄(X,Y)}`, verified against its defining square
/// for every `L`.
pub fn module_phibar(tc: &TensorClosedModuleData, cl: &ClosedData, k: &str, x: &str, y: &str) -> Result<Id> {
    let md = &tc.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let sxy = tc.h(x, y)?;
    let kx = md.t(k, x)?;
    let vkl = cl.hom(k, &sxy)?;
    let f = s.path(&[inverse(s, &md.a(&vkl, k, x)?)?, md.tu(&cl.ev(k, &sxy)?, x)?])?;
    let action = tc.phi(&vkl, &kx, &f)?;
    let g = m.seq(&[action, tc.hom.mor(s.id(&kx)?, &tc.eps(x, y)?)?.to_string()])?;
    let pb = inverse(&m.base, &g)?;
    for l in m.objects() {
        let lk = m.t(l, k)?;
        for f in s.hom(&md.t(l, &kx)?, y) {
            let lhs = transpose_pi(m, cl, l, k, &tc.phi(&lk, x, &s.path(&[md.a(l, k, x)?, f.to_string()])?)?)?;
            let rhs = m.seq(&[tc.phi(l, &kx, f)?, pb.clone()])?;
            derived("derived.module-phibar", &[k, x, y, l, f], &lhs, &rhs)?;
        }
    }
    Ok(pb)
}

/// `a^op` and `l^op` forced by the closed module structure, each found by
/// evaluating its natural family at an identity and confirmed unique over
/// the whole hom-set.
pub fn bimodule_completion(cm: &ClosedVModuleData, sym: &SymmetryData) -> Result<ClosedBimoduleData> {
    let tc = &cm.tensor_closed;
    let md = &tc.module;
    let (m, s) = (&md.base_v, &md.base_s);
    let (obs, vobs) = (md.objects(), m.objects());
    let mut out = ClosedBimoduleData { closed_module: cm.clone(), ..Default::default() };
    for &k in &vobs {
        for &l in &vobs {
            for &x in &obs {
                let (lx, klx) = (cm.cot(l, x)?, cm.cot(&m.t(k, l)?, x)?);
                let src = cm.cot(k, &lx)?;
                // σ_Y(g) for g: Y → K⋔(L⋔X), through the bottom-left of the square
                let sigma = |y: &str, g: &str| -> Result<Id> {
                    let h = theta_inv(cm, k, y, &lx, g)?;
                    let f = theta_inv(cm, l, &md.t(k, y)?, x, &h)?;
                    aop_square_top(cm, sym, k, l, y, x, &f)
                };
                let a = sigma(&src, s.id(&src)?)?;
                confirm_unique("a^op", &[k, l, x], s.hom(&src, &klx), &a, |cand| {
                    for &y in &obs {
                        for g in s.hom(y, &src) {
                            if s.comp(g, cand)? != sigma(y, g)? {
                                return Ok(false);
                            }
                        }
                    }
                    Ok(true)
                })?;
                out.assoc_op.insert(t(k, l, x), a);
            }
        }
    }
    for &x in &obs {
        let ix = cm.cot(&m.unit, x)?;
        // ψ(f ; l^op) = φ(l_Y ; f)
        let tau = |y: &str, f: &str| -> Result<Id> {
            cm.psi_inv(&m.unit, x, y, &tc.phi(&m.unit, y, &s.path(&[md.l(y)?, f.to_string()])?)?)
        };
        let lop = tau(x, s.id(x)?)?;
        confirm_unique("l^op", &[x], s.hom(x, &ix), &lop, |cand| {
            for &y in &obs {
                for f in s.hom(y, x) {
                    if s.comp(f, cand)? != tau(y, f)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        out.lunit_op.insert(x.to_string(), lop);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{build_bool, build_cyc, build_trop, module_self, poset_diamond, Instance};
    use crate::monoidal::self_vstructure;
    use crate::vstruct::check_vstructure;

    fn selfs() -> Vec<(Instance, ClosedVModuleData)> {
        [build_bool(), build_trop(3).unwrap(), build_cyc(3).unwrap()]
            .into_iter()
            .map(|v| {
                let cm = module_self(&v).unwrap();
                (v, cm)
            })
            .collect()
    }

    #[test]
    fn poset_and_self_modules_pass() {
        let pd = poset_diamond();
        assert_eq!(check_closed_module(&pd).unwrap(), vec![]);
        for (_, cm) in selfs() {
            assert_eq!(check_closed_module(&cm).unwrap(), vec![]);
        }
    }

    #[test]
    fn induced_structure_on_self_is_the_self_structure() {
        for (v, cm) in selfs() {
            let tc = &cm.tensor_closed;
            let vs = induced_vstructure(tc).unwrap();
            assert_eq!(vs, self_vstructure(&v.monoidal, &v.closed).unwrap());
            for k in v.monoidal.objects() {
                for x in v.monoidal.objects() {
                    for y in v.monoidal.objects() {
                        assert_eq!(
                            module_phibar(tc, &v.closed, k, x, y).unwrap(),
                            internal_pi_bar(&v.monoidal, &v.closed, k, x, y).unwrap()
                        );
                    }
                }
            }
        }
        let pd = poset_diamond();
        let b = build_bool();
        let vs = induced_vstructure(&pd.tensor_closed).unwrap();
        assert_eq!(check_vstructure(&vs).unwrap(), vec![]);
        assert_eq!(module_phibar(&pd.tensor_closed, &b.closed, "0", "x", "y").unwrap(), "id:1");
        assert_eq!(module_phibar(&build_trop(3).map(|v| module_self(&v).unwrap()).unwrap().tensor_closed, &build_trop(3).unwrap().closed, "1", "1", "2").unwrap(), "id:0");
    }

    #[test]
    fn cyc3_values() {
        let v = build_cyc(3).unwrap();
        let cm = module_self(&v).unwrap();
        let tc = &cm.tensor_closed;
        assert_eq!(module_eta_eps(tc, "*", "*", "*").unwrap(), ("0".to_string(), "0".to_string()));
        assert!(induced_vstructure(tc).unwrap().comp.values().all(|b| b == "0"));
        assert!(enriched_action(tc, &v.closed).unwrap().components.values().all(|c| c == "0"));
        assert_eq!(module_phibar(tc, &v.closed, "*", "*", "*").unwrap(), "0");
        for ((_, _, g), u) in &cm.psi {
            assert_eq!(g, u);
        }
    }

    #[test]
    fn poset_values() {
        let pd = poset_diamond();
        let b = build_bool();
        let tc = &pd.tensor_closed;
        assert_eq!(tc.module.t("0", "x").unwrap(), "bot");
        assert_eq!(pd.cot("0", "x").unwrap(), "top");
        assert_eq!(tc.module.a("0", "1", "x").unwrap(), "id:bot");
        let ea = enriched_action(tc, &b.closed).unwrap();
        assert_eq!(ea.components[&t("0", "1", "x")], "id:1");
        for y in ["bot", "x", "y", "top"] {
            let (_, eps) = module_eta_eps(tc, "1", "x", y).unwrap();
            let src = tc.module.t(&tc.h("x", y).unwrap(), "x").unwrap();
            assert_eq!(tc.module.base_s.hom(&src, y), vec![eps.as_str()]);
        }
    }

    #[test]
    fn dualize_is_an_involution_and_comodules_pass() {
        let pd = poset_diamond();
        let md = &pd.tensor_closed.module;
        assert_eq!(dualize_to_comodule(&dualize_to_comodule(md)), *md);
        let cb = bimodule_completion(&pd, &build_bool().symmetry).unwrap();
        assert_eq!(check_vmodule(&dualize_to_comodule(&comodule_of(&cb))).unwrap(), vec![]);
    }

    #[test]
    fn completion_passes_and_is_idempotent() {
        let mut cases = vec![(poset_diamond(), build_bool())];
        for (v, cm) in selfs() {
            cases.push((cm, v));
        }
        for (cm, v) in cases {
            let cb = bimodule_completion(&cm, &v.symmetry).unwrap();
            assert_eq!(check_closed_bimodule(&cb, &v.closed, &v.symmetry).unwrap(), vec![]);
            assert_eq!(bimodule_completion(&cb.closed_module, &v.symmetry).unwrap(), cb);
        }
        let cb = bimodule_completion(&poset_diamond(), &build_bool().symmetry).unwrap();
        assert!(cb.assoc_op.iter().all(|(_, a)| a.starts_with("id:")));
    }

    #[test]
    fn misassigned_assoc_is_reported() {
        // posetal, so a wrong entry can only be mistyped
        let mut pd = poset_diamond();
        pd.tensor_closed.module.assoc.insert(t("0", "1", "x"), "mbot_x".into());
        let laws: Vec<String> = check_vmodule(&pd.tensor_closed.module).unwrap().into_iter().map(|r| r.law).collect();
        assert_eq!(laws, vec!["module.typing"]);
        // a unit-breaking twist on CYC3 leaves associativity intact
        let mut cm = module_self(&build_cyc(3).unwrap()).unwrap();
        cm.tensor_closed.module.assoc.insert(t("*", "*", "*"), "1".into());
        let laws: Vec<String> = check_vmodule(&cm.tensor_closed.module).unwrap().into_iter().map(|r| r.law).collect();
        assert_eq!(laws, vec!["module.unit"]);
    }
}
