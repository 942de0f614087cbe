//! Categories with V-structure, cylinders, paths, opposite V-structures and
//! the tensor bifunctor induced by a cylinder assignment.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{check_bifunctor, inverse, opposite_category, validate_category, Bifunctor, FinCategory};
use crate::monoidal::{derived, hom_on_morphisms, typed, varpi, ClosedData, MonoidalData, SymmetryData};
use crate::report::{CheckReport, Reports};
use crate::tables::{entries, p, t, Pair, Triple};
use crate::Id;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VStructureData {
    pub base_s: FinCategory,
    pub base_v: MonoidalData,
    /// `S̄: S^op × S → V`
    pub hom: Bifunctor,
    /// `b̄_{X,Y,Z}: S̄(Y,Z) ⊗ S̄(X,Y) → S̄(X,Z)`
    #[serde(with = "entries")]
    pub comp: BTreeMap<Triple, Id>,
    /// `φ: S(X,Y) → V(I, S̄(X,Y))`, keyed by the morphism of `S`.
    #[serde(with = "entries")]
    pub phi: BTreeMap<Id, Id>,
}

/// One fixed `K`-cylinder of `X` for every `K ∈ V`, `X ∈ S`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CylinderAssignment {
    #[serde(with = "entries")]
    pub tensor_obj: BTreeMap<Pair, Id>,
    /// `α_{K,X}: K → S̄(X, K⊗X)`
    #[serde(with = "entries")]
    pub alpha: BTreeMap<Pair, Id>,
    /// `φ̄_{K,X,Y}: S̄(K⊗X, Y) → V̄(K, S̄(X,Y))`
    #[serde(with = "entries")]
    pub phibar: BTreeMap<Triple, Id>,
}

/// One fixed `K`-path of `X` for every `K ∈ V`, `X ∈ S`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PathAssignment {
    #[serde(with = "entries")]
    pub path_obj: BTreeMap<Pair, Id>,
    /// `β_{K,X}: K → S̄(K⋔X, X)`
    #[serde(with = "entries")]
    pub beta: BTreeMap<Pair, Id>,
    /// `ψ̄_{K,X,Y}: S̄(Y, K⋔X) → V̄(K, S̄(Y,X))`
    #[serde(with = "entries")]
    pub psibar: BTreeMap<Triple, Id>,
}

fn get<K: Ord + std::fmt::Debug>(map: &BTreeMap<K, Id>, table: &str, k: K) -> Result<Id> {
    map.get(&k).cloned().ok_or_else(|| Error::missing(table, k))
}

impl VStructureData {
    pub fn objects(&self) -> Vec<&str> {
        self.base_s.objects.iter().map(|s| s.as_str()).collect()
    }

    /// `S̄(x, y)` on objects.
    pub fn h(&self, x: &str, y: &str) -> Result<Id> {
        Ok(self.hom.obj(x, y)?.to_string())
    }

    /// `S̄(f, g)` on morphisms, `f` contravariant.
    pub fn hm(&self, f: &str, g: &str) -> Result<Id> {
        Ok(self.hom.mor(f, g)?.to_string())
    }

    /// `S̄(x, g)`
    pub fn post(&self, x: &str, g: &str) -> Result<Id> {
        self.hm(self.base_s.id(x)?, g)
    }

    /// `S̄(f, y)`
    pub fn pre(&self, f: &str, y: &str) -> Result<Id> {
        self.hm(f, self.base_s.id(y)?)
    }

    pub fn b(&self, x: &str, y: &str, z: &str) -> Result<Id> {
        get(&self.comp, "comp", t(x, y, z))
    }

    pub fn phi(&self, f: &str) -> Result<Id> {
        get(&self.phi, "phi", f.to_string())
    }

    /// `φ⁻¹(u)` for `u: I → S̄(x, y)`.
    pub fn phi_inv(&self, x: &str, y: &str, u: &str) -> Result<Id> {
        let found: Vec<&str> = self
            .base_s
            .hom(x, y)
            .into_iter()
            .filter(|f| self.phi.get(*f).map(|v| v == u).unwrap_or(false))
            .collect();
        match found.as_slice() {
            [f] => Ok(f.to_string()),
            _ => Err(Error::witness("phi inverse", &[x, y, u], found.len())),
        }
    }
}

impl CylinderAssignment {
    pub fn t(&self, k: &str, x: &str) -> Result<Id> {
        get(&self.tensor_obj, "tensorObj", p(k, x))
    }

    pub fn alpha(&self, k: &str, x: &str) -> Result<Id> {
        get(&self.alpha, "alpha", p(k, x))
    }

    pub fn phibar(&self, k: &str, x: &str, y: &str) -> Result<Id> {
        get(&self.phibar, "phibar", t(k, x, y))
    }
}

impl PathAssignment {
    pub fn t(&self, k: &str, x: &str) -> Result<Id> {
        get(&self.path_obj, "pathObj", p(k, x))
    }

    pub fn beta(&self, k: &str, x: &str) -> Result<Id> {
        get(&self.beta, "beta", p(k, x))
    }

    pub fn psibar(&self, k: &str, x: &str, y: &str) -> Result<Id> {
        get(&self.psibar, "psibar", t(k, x, y))
    }

    /// The same data read as a cylinder assignment for the opposite
    /// V-structure.
    pub fn dualize(&self) -> CylinderAssignment {
        CylinderAssignment {
            tensor_obj: self.path_obj.clone(),
            alpha: self.beta.clone(),
            phibar: self.psibar.clone(),
        }
    }
}

fn mismatch_type(cat: &FinCategory, law: &str, site: &[&str], f: &str, s: &str, d: &str) -> Result<Option<CheckReport>> {
    if typed(cat, f, s, d)? {
        return Ok(None);
    }
    let a = cat.arrow(f)?;
    Ok(Some(CheckReport::mismatch(law, site, &format!("{}->{}", a.src, a.dst), &format!("{s}->{d}"))))
}

/// Empty iff `S̄` is a bifunctor, `φ` a natural bijection, and the
/// associativity and both action conditions hold.
pub fn check_vstructure(vs: &VStructureData) -> Result<Vec<CheckReport>> {
    let s = &vs.base_s;
    let m = &vs.base_v;
    let v = &m.base;
    let base = validate_category(s)?;
    if !base.is_empty() {
        return Ok(base);
    }
    let mut r = Reports::default();
    for rep in check_bifunctor(&opposite_category(s), s, v, &vs.hom)? {
        r.push(CheckReport { law: format!("vstructure.{}", rep.law), ..rep });
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    let obs = vs.objects();
    let i = m.unit.as_str();
    for &x in &obs {
        for &y in &obs {
            for &z in &obs {
                let b = vs.b(x, y, z)?;
                let src = m.t(&vs.h(y, z)?, &vs.h(x, y)?)?;
                if let Some(rep) = mismatch_type(v, "vstructure.typing", &[x, y, z], &b, &src, &vs.h(x, z)?)? {
                    r.push(rep);
                }
            }
            let mut hit: BTreeMap<Id, usize> = v.hom(i, &vs.h(x, y)?).into_iter().map(|u| (u.to_string(), 0)).collect();
            for f in s.hom(x, y) {
                let u = vs.phi(f)?;
                match hit.get_mut(&u) {
                    Some(n) => *n += 1,
                    None => r.push(CheckReport::mismatch("vstructure.typing", &[f], &u, &format!("{i}->{}", vs.h(x, y)?))),
                }
            }
            if let Some((u, n)) = hit.iter().find(|(_, n)| **n != 1) {
                r.push(CheckReport::count("vstructure.phi-bijection", &[x, y, u], *n));
            }
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    for (f, g) in s.composable_pairs() {
        let (x, y, z) = (s.src(f)?, s.dst(f)?, s.dst(g)?);
        let fg = vs.phi(&s.comp(f, g)?)?;
        r.eq("vstructure.phi-naturality", &[f, g, "post"], &fg, &m.seq(&[vs.phi(f)?, vs.post(x, g)?])?);
        r.eq("vstructure.phi-naturality", &[f, g, "pre"], &fg, &m.seq(&[vs.phi(g)?, vs.pre(f, z)?])?);
        let _ = y;
    }
    for &x in &obs {
        for &y in &obs {
            let sxy = vs.h(x, y)?;
            for &z in &obs {
                let syz = vs.h(y, z)?;
                for &w in &obs {
                    let szw = vs.h(z, w)?;
                    let lhs = m.seq(&[m.a(&szw, &syz, &sxy)?, m.lid(&szw, &vs.b(x, y, z)?)?, vs.b(x, z, w)?])?;
                    let rhs = m.seq(&[m.rid(&vs.b(y, z, w)?, &sxy)?, vs.b(x, y, w)?])?;
                    r.eq("vstructure.assoc", &[x, y, z, w], &lhs, &rhs);
                }
            }
        }
    }
    for (f, a) in &s.morphisms {
        let (x, y) = (a.src.as_str(), a.dst.as_str());
        let phif = vs.phi(f)?;
        for &z in &obs {
            let syz = vs.h(y, z)?;
            let rhs = m.seq(&[m.inv(&m.r(&syz)?)?, m.lid(&syz, &phif)?, vs.b(x, y, z)?])?;
            r.eq("vstructure.left-action", &[f, z], &vs.pre(f, z)?, &rhs);
            let szx = vs.h(z, x)?;
            let rhs = m.seq(&[m.inv(&m.l(&szx)?)?, m.rid(&phif, &szx)?, vs.b(z, x, y)?])?;
            r.eq("vstructure.right-action", &[z, f], &vs.post(z, f)?, &rhs);
        }
    }
    Ok(r.finish())
}

/// Empty iff each `φ̄` is an isomorphism and `b̄ ∘ (1 ⊗ α) = ε ∘ (φ̄ ⊗ 1)`
/// for every `K, X, Y`.
pub fn check_cylinder(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment) -> Result<Vec<CheckReport>> {
    let m = &vs.base_v;
    let v = &m.base;
    let obs = vs.objects();
    let mut r = Reports::default();
    for k in m.objects() {
        for &x in &obs {
            let kx = cyl.t(k, x)?;
            if !vs.base_s.objects.contains(&kx) {
                return Err(Error::MalformedReference { table: "tensorObj".into(), id: kx });
            }
            if let Some(rep) = mismatch_type(v, "cylinder.typing", &[k, x], &cyl.alpha(k, x)?, k, &vs.h(x, &kx)?)? {
                r.push(rep);
            }
            for &y in &obs {
                let pb = cyl.phibar(k, x, y)?;
                let target = cl.hom(k, &vs.h(x, y)?)?;
                if let Some(rep) = mismatch_type(v, "cylinder.typing", &[k, x, y], &pb, &vs.h(&kx, y)?, &target)? {
                    r.push(rep);
                } else if crate::fincat::morphism_inverse(v, &pb)?.is_none() {
                    r.push(CheckReport::count("cylinder.iso", &[k, x, y], 0));
                }
            }
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    for k in m.objects() {
        for &x in &obs {
            let kx = cyl.t(k, x)?;
            let alpha = cyl.alpha(k, x)?;
            for &y in &obs {
                let skxy = vs.h(&kx, y)?;
                let lhs = m.seq(&[m.lid(&skxy, &alpha)?, vs.b(x, &kx, y)?])?;
                let rhs = m.seq(&[m.rid(&cyl.phibar(k, x, y)?, k)?, cl.ev(k, &vs.h(x, y)?)?])?;
                r.eq("cylinder.cp1-1", &[k, x, y], &lhs, &rhs);
            }
        }
    }
    if r.is_empty() {
        for k in m.objects() {
            for &x in &obs {
                let kx = cyl.t(k, x)?;
                let alpha = cyl.alpha(k, x)?;
                for &y in &obs {
                    let pb = cyl.phibar(k, x, y)?;
                    for f in vs.base_s.hom(&kx, y) {
                        let lhs = m.seq(&[vs.phi(f)?, pb.clone()])?;
                        let rhs = varpi(m, cl, &m.seq(&[alpha.clone(), vs.post(x, f)?])?)?;
                        derived("derived.phibar-phi", &[k, x, y, f], &lhs, &rhs)?;
                    }
                }
            }
        }
    }
    Ok(r.finish())
}

/// Empty iff each `ψ̄` is an isomorphism and `b̄ ∘ c ∘ (1 ⊗ β) = ε ∘ (ψ̄ ⊗ 1)`.
/// The verdict is cross-checked against `check_cylinder` on the opposite
/// V-structure.
pub fn check_path(vs: &VStructureData, cl: &ClosedData, sym: &SymmetryData, pth: &PathAssignment) -> Result<Vec<CheckReport>> {
    let m = &vs.base_v;
    let v = &m.base;
    let obs = vs.objects();
    let mut r = Reports::default();
    for k in m.objects() {
        for &x in &obs {
            let kx = pth.t(k, x)?;
            if !vs.base_s.objects.contains(&kx) {
                return Err(Error::MalformedReference { table: "pathObj".into(), id: kx });
            }
            if let Some(rep) = mismatch_type(v, "path.typing", &[k, x], &pth.beta(k, x)?, k, &vs.h(&kx, x)?)? {
                r.push(rep);
            }
            for &y in &obs {
                let pb = pth.psibar(k, x, y)?;
                let target = cl.hom(k, &vs.h(y, x)?)?;
                if let Some(rep) = mismatch_type(v, "path.typing", &[k, x, y], &pb, &vs.h(y, &kx)?, &target)? {
                    r.push(rep);
                } else if crate::fincat::morphism_inverse(v, &pb)?.is_none() {
                    r.push(CheckReport::count("path.iso", &[k, x, y], 0));
                }
            }
        }
    }
    if r.is_empty() {
        for k in m.objects() {
            for &x in &obs {
                let kx = pth.t(k, x)?;
                let beta = pth.beta(k, x)?;
                for &y in &obs {
                    let sykx = vs.h(y, &kx)?;
                    let lhs = m.seq(&[
                        m.lid(&sykx, &beta)?,
                        sym.c(&sykx, &vs.h(&kx, x)?)?,
                        vs.b(y, &kx, x)?,
                    ])?;
                    let rhs = m.seq(&[m.rid(&pth.psibar(k, x, y)?, k)?, cl.ev(k, &vs.h(y, x)?)?])?;
                    r.eq("path.cp2-1-25", &[k, x, y], &lhs, &rhs);
                }
            }
        }
    }
    let dual = check_cylinder(&opposite_vstructure(vs, sym)?, cl, &pth.dualize())?;
    if dual.is_empty() != r.is_empty() {
        return Err(Error::EngineBug {
            law: "derived.path-opposite-cylinder".into(),
            site: vec![],
            detail: format!("path reports {}, dual cylinder reports {}", r.0.len(), dual.len()),
        });
    }
    Ok(r.finish())
}

/// The V-structure on `S^op`: `S̄^op(X,Y) = S̄(Y,X)`,
/// `b̄^op_{X,Y,Z} = b̄_{Z,Y,X} ∘ c`, `φ^op_{X,Y} = φ_{Y,X}`.
pub fn opposite_vstructure(vs: &VStructureData, sym: &SymmetryData) -> Result<VStructureData> {
    let m = &vs.base_v;
    let mut hom = Bifunctor::default();
    for ((x, y), o) in &vs.hom.on_objects {
        hom.on_objects.insert(p(y, x), o.clone());
    }
    for ((f, g), o) in &vs.hom.on_morphisms {
        hom.on_morphisms.insert(p(g, f), o.clone());
    }
    let mut comp = BTreeMap::new();
    for x in vs.objects() {
        for y in vs.objects() {
            for z in vs.objects() {
                let c = sym.c(&vs.h(z, y)?, &vs.h(y, x)?)?;
                comp.insert(t(x, y, z), m.seq(&[c, vs.b(z, y, x)?])?);
            }
        }
    }
    Ok(VStructureData {
        base_s: opposite_category(&vs.base_s),
        base_v: vs.base_v.clone(),
        hom,
        comp,
        phi: vs.phi.clone(),
    })
}

/// The unique isomorphism `f: K⊗X → K⊗'X` with `α' = S̄(X,f) ∘ α`,
/// computed by transport and confirmed by exhaustive search.
pub fn cylinder_unique_iso(
    vs: &VStructureData,
    cl: &ClosedData,
    cyl_a: &CylinderAssignment,
    cyl_b: &CylinderAssignment,
    k: &str,
    x: &str,
) -> Result<Id> {
    let (kx, kx2) = (cyl_a.t(k, x)?, cyl_b.t(k, x)?);
    let (alpha, alpha2) = (cyl_a.alpha(k, x)?, cyl_b.alpha(k, x)?);
    let f = transport(vs, cl, cyl_a, k, x, &kx2, &alpha2)?;
    let brute = witnesses(vs, &kx, &kx2, x, &alpha, &alpha2)?;
    if brute != [f.as_str()] {
        return Err(Error::witness("cylinder isomorphism", &[k, x], brute.len()));
    }
    inverse(&vs.base_s, &f)?;
    Ok(f)
}

/// `φ⁻¹(φ̄⁻¹ ∘ ϖ(target))`: the morphism `f: K⊗X → y` with
/// `S̄(X,f) ∘ α_{K,X} = target`.
fn transport(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment, k: &str, x: &str, y: &str, target: &str) -> Result<Id> {
    let m = &vs.base_v;
    let pb_inv = m.inv(&cyl.phibar(k, x, y)?)?;
    let u = m.seq(&[varpi(m, cl, target)?, pb_inv])?;
    vs.phi_inv(&cyl.t(k, x)?, y, &u)
}

/// All `f: kx → y` in lexicographic order with `S̄(x,f) ∘ alpha = target`.
fn witnesses<'a>(vs: &'a VStructureData, kx: &str, y: &str, x: &str, alpha: &str, target: &str) -> Result<Vec<&'a str>> {
    let mut out = Vec::new();
    for f in vs.base_s.hom(kx, y) {
        if vs.base_v.seq(&[alpha.to_string(), vs.post(x, f)?])? == target {
            out.push(f);
        }
    }
    Ok(out)
}

/// The bifunctor `V × S → S` determined by a cylinder assignment.
pub fn induced_tensor_bifunctor(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment) -> Result<Bifunctor> {
    let m = &vs.base_v;
    let s = &vs.base_s;
    let mut left: BTreeMap<Pair, Id> = BTreeMap::new(); // u ⊗ X
    let mut right: BTreeMap<Pair, Id> = BTreeMap::new(); // K ⊗ v
    for (u, ua) in &m.base.morphisms {
        let (k, l) = (ua.src.as_str(), ua.dst.as_str());
        for x in vs.objects() {
            let target = m.seq(&[u.clone(), cyl.alpha(l, x)?])?;
            let lx = cyl.t(l, x)?;
            let f = transport(vs, cl, cyl, k, x, &lx, &target)?;
            let brute = witnesses(vs, &cyl.t(k, x)?, &lx, x, &cyl.alpha(k, x)?, &target)?;
            if brute != [f.as_str()] {
                return Err(Error::witness("u⊗X", &[u, x], brute.len()));
            }
            left.insert(p(u, x), f);
        }
    }
    for k in m.objects() {
        for (v, va) in &s.morphisms {
            let (x, y) = (va.src.as_str(), va.dst.as_str());
            let ky = cyl.t(k, y)?;
            let target = m.seq(&[cyl.alpha(k, y)?, vs.pre(v, &ky)?])?;
            let f = transport(vs, cl, cyl, k, x, &ky, &target)?;
            let brute = witnesses(vs, &cyl.t(k, x)?, &ky, x, &cyl.alpha(k, x)?, &target)?;
            if brute != [f.as_str()] {
                return Err(Error::witness("K⊗v", &[k, v], brute.len()));
            }
            right.insert(p(k, v), f);
        }
    }
    let mut bf = Bifunctor::default();
    for k in m.objects() {
        for x in vs.objects() {
            bf.on_objects.insert(p(k, x), cyl.t(k, x)?);
        }
    }
    for (u, ua) in &m.base.morphisms {
        for (v, va) in &s.morphisms {
            let (k, l) = (ua.src.as_str(), ua.dst.as_str());
            let (x, y) = (va.src.as_str(), va.dst.as_str());
            let one = s.path(&[&left[&p(u, x)], &right[&p(l, v)]])?;
            let other = s.path(&[&right[&p(k, v)], &left[&p(u, y)]])?;
            derived("derived.tensor-interchange", &[u, v], &one, &other)?;
            bf.on_morphisms.insert(p(u, v), one);
        }
    }
    if let Some(rep) = check_bifunctor(&m.base, s, s, &bf)?.first() {
        return Err(Error::EngineBug { law: "derived.tensor-bifunctor".into(), site: rep.site.clone(), detail: rep.law.clone() });
    }
    phibar_naturality(vs, cl, cyl, &bf)?;
    Ok(bf)
}

/// `φ̄_{K,X,Y}` is natural in `K`, `X` and `Y`.
fn phibar_naturality(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment, bf: &Bifunctor) -> Result<()> {
    let m = &vs.base_v;
    let s = &vs.base_s;
    let obs = vs.objects();
    for k in m.objects() {
        let idk = m.id(k)?;
        for &x in &obs {
            let kx = cyl.t(k, x)?;
            for (g, ga) in &s.morphisms {
                let (y, y2) = (ga.src.as_str(), ga.dst.as_str());
                let lhs = m.seq(&[cyl.phibar(k, x, y)?, hom_on_morphisms(m, cl, &idk, &vs.post(x, g)?)?])?;
                let rhs = m.seq(&[vs.post(&kx, g)?, cyl.phibar(k, x, y2)?])?;
                derived("derived.phibar-natural-y", &[k, x, g], &lhs, &rhs)?;
            }
        }
        for (v, va) in &s.morphisms {
            let (x, x2) = (va.src.as_str(), va.dst.as_str());
            for &y in &obs {
                let kv = bf.mor(&idk, v)?;
                let lhs = m.seq(&[vs.pre(kv, y)?, cyl.phibar(k, x, y)?])?;
                let rhs = m.seq(&[cyl.phibar(k, x2, y)?, hom_on_morphisms(m, cl, &idk, &vs.pre(v, y)?)?])?;
                derived("derived.phibar-natural-x", &[k, v, y], &lhs, &rhs)?;
            }
        }
    }
    for (u, ua) in &m.base.morphisms {
        let (k, l) = (ua.src.as_str(), ua.dst.as_str());
        for &x in &obs {
            let ux = bf.mor(u, s.id(x)?)?;
            for &y in &obs {
                let sxy = vs.h(x, y)?;
                let lhs = m.seq(&[vs.pre(ux, y)?, cyl.phibar(k, x, y)?])?;
                let rhs = m.seq(&[cyl.phibar(l, x, y)?, hom_on_morphisms(m, cl, u, &m.id(&sxy)?)?])?;
                derived("derived.phibar-natural-k", &[u, x, y], &lhs, &rhs)?;
            }
        }
    }
    Ok(())
}
