//! V-categories, V-functors and V-natural transformations, and the passage
//! between V-categories and categories with V-structure.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{identity_id, Arrow, Bifunctor, FinCategory};
use crate::monoidal::{
    hom_on_morphisms, self_vstructure, transpose_pi, typed, varpi_inv, ClosedData, MonoidalData, SymmetryData,
};
use crate::report::{CheckReport, Reports};
use crate::tables::{entries, p, t, Pair, Triple};
use crate::vstruct::VStructureData;
use crate::Id;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VCategoryData {
    pub base_v: MonoidalData,
    pub objects: BTreeSet<Id>,
    #[serde(with = "entries")]
    pub hom_obj: BTreeMap<Pair, Id>,
    /// `b̄_{A,B,C}: Ā(B,C) ⊗ Ā(A,B) → Ā(A,C)`
    #[serde(with = "entries")]
    pub comp: BTreeMap<Triple, Id>,
    /// `j_A: I → Ā(A,A)`
    #[serde(with = "entries")]
    pub unit: BTreeMap<Id, Id>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VFunctorData {
    #[serde(with = "entries")]
    pub on_objects: BTreeMap<Id, Id>,
    /// `T_{A,B}: Ā(A,B) → B̄(TA,TB)`
    #[serde(with = "entries")]
    pub on_hom: BTreeMap<Pair, Id>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VNatData {
    /// `α_A: I → B̄(SA,TA)`
    #[serde(with = "entries")]
    pub components: BTreeMap<Id, Id>,
}

fn get<K: Ord + std::fmt::Debug>(map: &BTreeMap<K, Id>, table: &str, k: K) -> Result<Id> {
    map.get(&k).cloned().ok_or_else(|| Error::missing(table, k))
}

impl VCategoryData {
    pub fn objects(&self) -> Vec<&str> {
        self.objects.iter().map(|s| s.as_str()).collect()
    }

    pub fn h(&self, a: &str, b: &str) -> Result<Id> {
        get(&self.hom_obj, "homObj", p(a, b))
    }

    pub fn b(&self, a: &str, b: &str, c: &str) -> Result<Id> {
        get(&self.comp, "comp", t(a, b, c))
    }

    pub fn j(&self, a: &str) -> Result<Id> {
        get(&self.unit, "unit", a.to_string())
    }
}

impl VFunctorData {
    pub fn obj(&self, a: &str) -> Result<Id> {
        get(&self.on_objects, "onObjects", a.to_string())
    }

    pub fn hom(&self, a: &str, b: &str) -> Result<Id> {
        get(&self.on_hom, "onHom", p(a, b))
    }
}

impl VNatData {
    pub fn at(&self, a: &str) -> Result<Id> {
        get(&self.components, "components", a.to_string())
    }
}

fn shape(m: &MonoidalData, what: &str, f: &str, src: &str, dst: &str) -> Result<()> {
    if typed(&m.base, f, src, dst)? {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("{what}: {f} is not {src}->{dst}")))
    }
}

/// Empty iff the associativity and both unit diagrams commute.
pub fn check_vcategory(vc: &VCategoryData) -> Result<Vec<CheckReport>> {
    let m = &vc.base_v;
    let obs = vc.objects();
    let mut r = Reports::default();
    for &a in &obs {
        let j = vc.j(a)?;
        if !typed(&m.base, &j, &m.unit, &vc.h(a, a)?)? {
            r.push(CheckReport::mismatch("vcat.typing", &[a], &j, &format!("{}->{}", m.unit, vc.h(a, a)?)));
        }
        for &b in &obs {
            for &c in &obs {
                let f = vc.b(a, b, c)?;
                let src = m.t(&vc.h(b, c)?, &vc.h(a, b)?)?;
                if !typed(&m.base, &f, &src, &vc.h(a, c)?)? {
                    r.push(CheckReport::mismatch("vcat.typing", &[a, b, c], &f, &format!("{src}->{}", vc.h(a, c)?)));
                }
            }
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    for &a in &obs {
        for &b in &obs {
            let hab = vc.h(a, b)?;
            for &c in &obs {
                let hbc = vc.h(b, c)?;
                for &d in &obs {
                    let hcd = vc.h(c, d)?;
                    let lhs = m.seq(&[m.a(&hcd, &hbc, &hab)?, m.lid(&hcd, &vc.b(a, b, c)?)?, vc.b(a, c, d)?])?;
                    let rhs = m.seq(&[m.rid(&vc.b(b, c, d)?, &hab)?, vc.b(a, b, d)?])?;
                    r.eq("vcat.assoc", &[a, b, c, d], &lhs, &rhs);
                }
            }
            let left = m.seq(&[m.rid(&vc.j(b)?, &hab)?, vc.b(a, b, b)?])?;
            r.eq("vcat.unit", &[a, b, "left"], &left, &m.l(&hab)?);
            let right = m.seq(&[m.lid(&hab, &vc.j(a)?)?, vc.b(a, a, b)?])?;
            r.eq("vcat.unit", &[a, b, "right"], &right, &m.r(&hab)?);
        }
    }
    Ok(r.finish())
}

/// `Ā = S̄`, `b̄` unchanged, `j_A = φ(1_A)`.
pub fn associated_vcategory(vs: &VStructureData) -> Result<VCategoryData> {
    let mut vc = VCategoryData { base_v: vs.base_v.clone(), objects: vs.base_s.objects.clone(), comp: vs.comp.clone(), ..Default::default() };
    for a in vs.objects() {
        for b in vs.objects() {
            vc.hom_obj.insert(p(a, b), vs.h(a, b)?);
        }
        vc.unit.insert(a.to_string(), vs.phi(vs.base_s.id(a)?)?);
    }
    Ok(vc)
}

/// Name of the underlying morphism `A → B` with V-witness `u: I → Ā(A,B)`.
/// Units are named as identities.
pub fn underlying_name(a: &str, b: &str, u: &str, unit: Option<&str>) -> Id {
    if a == b && unit == Some(u) {
        identity_id(a)
    } else {
        format!("{u}@{a},{b}")
    }
}

/// The category with `S(A,B) = Hom_V(I, Ā(A,B))` and its V-structure.
pub fn underlying_category(vc: &VCategoryData) -> Result<(FinCategory, VStructureData)> {
    let m = &vc.base_v;
    let obs = vc.objects();
    let i = m.unit.as_str();
    let name = |a: &str, b: &str, u: &str| -> Result<Id> {
        Ok(underlying_name(a, b, u, if a == b { Some(vc.j(a)?) } else { None }.as_deref()))
    };
    let mut cat = FinCategory { objects: vc.objects.clone(), ..Default::default() };
    let mut phi = BTreeMap::new();
    let mut hom: BTreeMap<Pair, Vec<(Id, Id)>> = BTreeMap::new();
    for &a in &obs {
        cat.identity.insert(a.to_string(), identity_id(a));
        for &b in &obs {
            for u in m.base.hom(i, &vc.h(a, b)?) {
                let f = name(a, b, u)?;
                cat.morphisms.insert(f.clone(), Arrow { src: a.into(), dst: b.into() });
                phi.insert(f.clone(), u.to_string());
                hom.entry(p(a, b)).or_default().push((f, u.to_string()));
            }
        }
    }
    let l_inv = m.inv(&m.l(i)?)?;
    for &a in &obs {
        for &b in &obs {
            for &c in &obs {
                for (f, u) in &hom.get(&p(a, b)).cloned().unwrap_or_default() {
                    for (g, w) in &hom.get(&p(b, c)).cloned().unwrap_or_default() {
                        let gf = m.seq(&[l_inv.clone(), m.tm(w, u)?, vc.b(a, b, c)?])?;
                        cat.comp.insert(p(f, g), name(a, c, &gf)?);
                    }
                }
            }
        }
    }
    let mut vs = VStructureData { base_s: cat.clone(), base_v: m.clone(), hom: Bifunctor::default(), comp: vc.comp.clone(), phi };
    for &a in &obs {
        for &b in &obs {
            vs.hom.on_objects.insert(p(a, b), vc.h(a, b)?);
        }
    }
    // S̄(A,g) = b̄ ∘ (φg ⊗ 1) ∘ l⁻¹ and S̄(f,B') = b̄ ∘ (1 ⊗ φf) ∘ r⁻¹
    let mut entries = Vec::new();
    for (f, fa) in &cat.morphisms {
        for (g, ga) in &cat.morphisms {
            let (a2, a) = (fa.src.as_str(), fa.dst.as_str());
            let (b, b2) = (ga.src.as_str(), ga.dst.as_str());
            let hab = vc.h(a, b)?;
            let post = m.seq(&[m.inv(&m.l(&hab)?)?, m.rid(&vs.phi(g)?, &hab)?, vc.b(a, b, b2)?])?;
            let hab2 = vc.h(a, b2)?;
            let pre = m.seq(&[m.inv(&m.r(&hab2)?)?, m.lid(&hab2, &vs.phi(f)?)?, vc.b(a2, a, b2)?])?;
            entries.push((p(f, g), m.seq(&[post, pre])?));
        }
    }
    vs.hom.on_morphisms.extend(entries);
    Ok((cat, vs))
}

/// Renames every morphism `f` of `S` after its V-witness `φ(f)`, matching
/// the names chosen by `underlying_category`.
pub fn canonical_rename(vs: &VStructureData) -> Result<VStructureData> {
    let s = &vs.base_s;
    let mut ren = BTreeMap::new();
    for (f, a) in &s.morphisms {
        let unit = if a.src == a.dst { Some(vs.phi(s.id(&a.src)?)?) } else { None };
        ren.insert(f.clone(), underlying_name(&a.src, &a.dst, &vs.phi(f)?, unit.as_deref()));
    }
    let rn = |f: &Id| ren[f].clone();
    let base_s = FinCategory {
        objects: s.objects.clone(),
        morphisms: s.morphisms.iter().map(|(f, a)| (rn(f), a.clone())).collect(),
        identity: s.identity.iter().map(|(x, f)| (x.clone(), rn(f))).collect(),
        comp: s.comp.iter().map(|((f, g), h)| ((rn(f), rn(g)), rn(h))).collect(),
    };
    let hom = Bifunctor {
        on_objects: vs.hom.on_objects.clone(),
        on_morphisms: vs.hom.on_morphisms.iter().map(|((f, g), h)| ((rn(f), rn(g)), h.clone())).collect(),
    };
    Ok(VStructureData {
        base_s,
        base_v: vs.base_v.clone(),
        hom,
        comp: vs.comp.clone(),
        phi: vs.phi.iter().map(|(f, u)| (rn(f), u.clone())).collect(),
    })
}

/// Empty iff `T` preserves composition and units.
pub fn check_vfunctor(a: &VCategoryData, b: &VCategoryData, f: &VFunctorData) -> Result<Vec<CheckReport>> {
    let m = &a.base_v;
    let obs = a.objects();
    for &x in &obs {
        for &y in &obs {
            shape(m, "V-functor component", &f.hom(x, y)?, &a.h(x, y)?, &b.h(&f.obj(x)?, &f.obj(y)?)?)?;
        }
    }
    let mut r = Reports::default();
    for &x in &obs {
        let tx = f.obj(x)?;
        for &y in &obs {
            let ty = f.obj(y)?;
            for &z in &obs {
                let tz = f.obj(z)?;
                let lhs = m.seq(&[a.b(x, y, z)?, f.hom(x, z)?])?;
                let rhs = m.seq(&[m.tm(&f.hom(y, z)?, &f.hom(x, y)?)?, b.b(&tx, &ty, &tz)?])?;
                r.eq("vfunctor.composition", &[x, y, z], &lhs, &rhs);
            }
        }
        r.eq("vfunctor.unit", &[x], &m.seq(&[a.j(x)?, f.hom(x, x)?])?, &b.j(&tx)?);
    }
    Ok(r.finish())
}

/// Empty iff `b̄ ∘ (α_B ⊗ S) ∘ l⁻¹ = b̄ ∘ (T ⊗ α_A) ∘ r⁻¹` for all `A, B`.
pub fn check_vnat(
    a: &VCategoryData,
    b: &VCategoryData,
    s: &VFunctorData,
    tf: &VFunctorData,
    alpha: &VNatData,
) -> Result<Vec<CheckReport>> {
    let m = &a.base_v;
    let obs = a.objects();
    for &x in &obs {
        shape(m, "V-natural component", &alpha.at(x)?, &m.unit, &b.h(&s.obj(x)?, &tf.obj(x)?)?)?;
    }
    let mut r = Reports::default();
    for &x in &obs {
        for &y in &obs {
            let hxy = a.h(x, y)?;
            let (sx, sy, tx, ty) = (s.obj(x)?, s.obj(y)?, tf.obj(x)?, tf.obj(y)?);
            let lhs = m.seq(&[m.inv(&m.l(&hxy)?)?, m.tm(&alpha.at(y)?, &s.hom(x, y)?)?, b.b(&sx, &sy, &ty)?])?;
            let rhs = m.seq(&[m.inv(&m.r(&hxy)?)?, m.tm(&tf.hom(x, y)?, &alpha.at(x)?)?, b.b(&sx, &tx, &ty)?])?;
            r.eq("vnat.naturality", &[x, y], &lhs, &rhs);
        }
    }
    Ok(r.finish())
}

/// V over itself as a V-category.
pub fn self_vcategory(m: &MonoidalData, cl: &ClosedData) -> Result<VCategoryData> {
    associated_vcategory(&self_vstructure(m, cl)?)
}

/// `check_vnat` into V itself, cross-checked site by site against the
/// square `V̄(1, ϖ⁻¹α_B) ∘ S_{A,B} = V̄(ϖ⁻¹α_A, 1) ∘ T_{A,B}`.
pub fn check_vnat_into_v(
    a: &VCategoryData,
    cl: &ClosedData,
    s: &VFunctorData,
    tf: &VFunctorData,
    alpha: &VNatData,
) -> Result<Vec<CheckReport>> {
    let m = &a.base_v;
    let v = self_vcategory(m, cl)?;
    let direct = check_vnat(a, &v, s, tf, alpha)?;
    let failing: BTreeSet<Vec<Id>> = direct.iter().map(|r| r.site.clone()).collect();
    let obs = a.objects();
    for &x in &obs {
        for &y in &obs {
            let (sx, sy, tx, ty) = (s.obj(x)?, s.obj(y)?, tf.obj(x)?, tf.obj(y)?);
            let ay = varpi_inv(m, cl, &sy, &ty, &alpha.at(y)?)?;
            let ax = varpi_inv(m, cl, &sx, &tx, &alpha.at(x)?)?;
            let lhs = m.seq(&[s.hom(x, y)?, hom_on_morphisms(m, cl, &m.id(&sx)?, &ay)?])?;
            let rhs = m.seq(&[tf.hom(x, y)?, hom_on_morphisms(m, cl, &ax, &m.id(&ty)?)?])?;
            if (lhs == rhs) == failing.contains(&vec![x.to_string(), y.to_string()]) {
                return Err(Error::EngineBug {
                    law: "derived.vnat-square".into(),
                    site: vec![x.into(), y.into()],
                    detail: format!("square {lhs} vs {rhs} disagrees with the direct check"),
                });
            }
        }
    }
    Ok(direct)
}

/// `Ā(A,−): A → V` with `Ā(A,−)_{B,C} = π(b̄_{A,B,C})`.
pub fn hom_vfunctor(vc: &VCategoryData, cl: &ClosedData, a: &str) -> Result<VFunctorData> {
    let m = &vc.base_v;
    let mut f = VFunctorData::default();
    for b in vc.objects() {
        f.on_objects.insert(b.to_string(), vc.h(a, b)?);
        for c in vc.objects() {
            f.on_hom.insert(p(b, c), transpose_pi(m, cl, &vc.h(b, c)?, &vc.h(a, b)?, &vc.b(a, b, c)?)?);
        }
    }
    Ok(f)
}

/// `Ā^op(A,B) = Ā(B,A)`, `b̄^op_{A,B,C} = b̄_{C,B,A} ∘ c`, `j^op = j`.
pub fn opposite_vcategory(vc: &VCategoryData, s: &SymmetryData) -> Result<VCategoryData> {
    let m = &vc.base_v;
    let mut op = VCategoryData { base_v: m.clone(), objects: vc.objects.clone(), unit: vc.unit.clone(), ..Default::default() };
    for a in vc.objects() {
        for b in vc.objects() {
            op.hom_obj.insert(p(a, b), vc.h(b, a)?);
            for c in vc.objects() {
                let sw = s.c(&vc.h(c, b)?, &vc.h(b, a)?)?;
                op.comp.insert(t(a, b, c), m.seq(&[sw, vc.b(c, b, a)?])?);
            }
        }
    }
    Ok(op)
}

/// A chosen tensor `K⊗X` for every `K ∈ V` and object `X`, with
/// `φ̄_{K,X,Y}: Ā(K⊗X, Y) ≅ V̄(K, Ā(X,Y))`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TensoredData {
    #[serde(with = "entries")]
    pub tensor_obj: BTreeMap<Pair, Id>,
    #[serde(with = "entries")]
    pub phibar: BTreeMap<Triple, Id>,
}

impl TensoredData {
    pub fn t(&self, k: &str, x: &str) -> Result<Id> {
        get(&self.tensor_obj, "tensorObj", p(k, x))
    }

    pub fn phibar(&self, k: &str, x: &str, y: &str) -> Result<Id> {
        get(&self.phibar, "phibar", t(k, x, y))
    }
}

/// Empty iff every `φ̄_{K,X,Y}` is an isomorphism V-natural in `Y`. The
/// V-naturality square is checked in transposed form and compared, site by
/// site, with `check_vnat_into_v` on `Ā(K⊗X,−) ⇒ V̄(K, Ā(X,−))`.
pub fn check_tensored(vc: &VCategoryData, cl: &ClosedData, td: &TensoredData) -> Result<Vec<CheckReport>> {
    let m = &vc.base_v;
    let obs = vc.objects();
    let mut r = Reports::default();
    for k in m.objects() {
        for &x in &obs {
            let kx = td.t(k, x)?;
            if !vc.objects.contains(&kx) {
                return Err(Error::ShapeMismatch(format!("{k}⊗{x} = {kx} is not an object")));
            }
            for &y in &obs {
                let pb = td.phibar(k, x, y)?;
                let (s, d) = (vc.h(&kx, y)?, cl.hom(k, &vc.h(x, y)?)?);
                if !typed(&m.base, &pb, &s, &d)? {
                    let a = m.base.arrow(&pb)?;
                    r.push(CheckReport::mismatch("tensored.typing", &[k, x, y], &format!("{}->{}", a.src, a.dst), &format!("{s}->{d}")));
                } else if crate::fincat::morphism_inverse(&m.base, &pb)?.is_none() {
                    r.push(CheckReport::count("tensored.iso", &[k, x, y], 0));
                }
            }
        }
    }
    if !r.is_empty() {
        return Ok(r.finish());
    }
    let v = self_vcategory(m, cl)?;
    for k in m.objects() {
        let vk = hom_vfunctor(&v, cl, k)?;
        for &x in &obs {
            let kx = td.t(k, x)?;
            let ax = hom_vfunctor(vc, cl, x)?;
            // V̄(K, Ā(X, −))
            let mut target = VFunctorData::default();
            let mut alpha = VNatData::default();
            for &y in &obs {
                target.on_objects.insert(y.into(), cl.hom(k, &vc.h(x, y)?)?);
                alpha.components.insert(y.into(), crate::monoidal::varpi(m, cl, &td.phibar(k, x, y)?)?);
                for &z in &obs {
                    let (axy, axz) = (vc.h(x, y)?, vc.h(x, z)?);
                    target.on_hom.insert(p(y, z), m.seq(&[ax.hom(y, z)?, vk.hom(&axy, &axz)?])?);
                }
            }
            let mut failing = BTreeSet::new();
            for &y in &obs {
                for &z in &obs {
                    let vkxy = cl.hom(k, &vc.h(x, y)?)?;
                    let delta = crate::monoidal::transpose_pi_inv(m, cl, &vkxy, &target.obj(z)?, &target.hom(y, z)?)?;
                    let lhs = m.seq(&[m.lid(&vc.h(y, z)?, &td.phibar(k, x, y)?)?, delta])?;
                    let rhs = m.seq(&[vc.b(&kx, y, z)?, td.phibar(k, x, z)?])?;
                    if lhs != rhs {
                        failing.insert(vec![y.to_string(), z.to_string()]);
                    }
                    r.eq("tensored.naturality", &[k, x, y, z], &lhs, &rhs);
                }
            }
            let direct = check_vnat_into_v(vc, cl, &hom_vfunctor(vc, cl, &kx)?, &target, &alpha)?;
            let other: BTreeSet<Vec<Id>> = direct.into_iter().map(|r| r.site).collect();
            if other != failing {
                return Err(Error::EngineBug {
                    law: "derived.tensored-square".into(),
                    site: vec![k.into(), x.into()],
                    detail: format!("transposed square fails at {failing:?}, V-naturality at {other:?}"),
                });
            }
        }
    }
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;
    use crate::instances::{build_bool, build_cyc, build_trop};
    use crate::vstruct::check_vstructure;

    #[test]
    fn round_trips() {
        for v in [build_bool(), build_trop(3).unwrap(), build_cyc(3).unwrap()] {
            let vs = self_vstructure(&v.monoidal, &v.closed).unwrap();
            let vc = associated_vcategory(&vs).unwrap();
            assert_eq!(check_vcategory(&vc).unwrap(), vec![]);
            let (cat, us) = underlying_category(&vc).unwrap();
            assert_eq!(validate_category(&cat).unwrap(), vec![]);
            assert_eq!(check_vstructure(&us).unwrap(), vec![]);
            assert_eq!(us, canonical_rename(&vs).unwrap());
            assert_eq!(associated_vcategory(&us).unwrap(), vc);

            let op = opposite_vcategory(&vc, &v.symmetry).unwrap();
            assert_eq!(check_vcategory(&op).unwrap(), vec![]);
            assert_eq!(opposite_vcategory(&op, &v.symmetry).unwrap(), vc);

            let id = VFunctorData {
                on_objects: vc.objects.iter().map(|a| (a.clone(), a.clone())).collect(),
                on_hom: vc.hom_obj.iter().map(|(k, h)| (k.clone(), v.monoidal.id(h).unwrap())).collect(),
            };
            assert_eq!(check_vfunctor(&vc, &vc, &id).unwrap(), vec![]);
            let j = VNatData { components: vc.unit.clone() };
            assert_eq!(check_vnat(&vc, &vc, &id, &id, &j).unwrap(), vec![]);
            for a in vc.objects() {
                let h = hom_vfunctor(&vc, &v.closed, a).unwrap();
                let target = self_vcategory(&v.monoidal, &v.closed).unwrap();
                assert_eq!(check_vfunctor(&vc, &target, &h).unwrap(), vec![]);
                let jh = VNatData { components: h.on_objects.iter().map(|(b, x)| (b.clone(), target.j(x).unwrap())).collect() };
                assert_eq!(check_vnat_into_v(&vc, &v.closed, &h, &h, &jh).unwrap(), vec![]);
            }
        }
    }

    #[test]
    fn reference_values() {
        let c3 = build_cyc(3).unwrap();
        let vc = self_vcategory(&c3.monoidal, &c3.closed).unwrap();
        assert_eq!(vc.j("*").unwrap(), "0");
        let (cat, _) = underlying_category(&vc).unwrap();
        assert_eq!(cat.hom("*", "*").len(), 3);
        assert_eq!(cat.comp("1@*,*", "2@*,*").unwrap(), "id:*");
        assert_eq!(hom_vfunctor(&vc, &c3.closed, "*").unwrap().hom("*", "*").unwrap(), "0");
        assert_eq!(opposite_vcategory(&vc, &c3.symmetry).unwrap(), vc);

        let mut bad = vc.clone();
        bad.unit.insert("*".into(), "1".into());
        let laws: BTreeSet<String> = check_vcategory(&bad).unwrap().into_iter().map(|r| r.law).collect();
        assert_eq!(laws, BTreeSet::from(["vcat.unit".to_string()]));

        let id = VFunctorData { on_objects: BTreeMap::from([("*".into(), "*".into())]), on_hom: BTreeMap::from([(p("*", "*"), "0".into())]) };
        let alpha = VNatData { components: BTreeMap::from([("*".into(), "1".into())]) };
        // every component commutes in an abelian group; corrupt the functor instead
        assert_eq!(check_vnat_into_v(&vc, &c3.closed, &id, &id, &alpha).unwrap(), vec![]);
        let shifted = VFunctorData { on_hom: BTreeMap::from([(p("*", "*"), "1".into())]), ..id.clone() };
        let reps = check_vnat_into_v(&vc, &c3.closed, &id, &shifted, &alpha).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].law, "vnat.naturality");

        let b = build_bool();
        let vc = self_vcategory(&b.monoidal, &b.closed).unwrap();
        let (cat, _) = underlying_category(&vc).unwrap();
        for (x, y) in [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")] {
            assert_eq!(!cat.hom(x, y).is_empty(), x <= y);
        }
        let h = hom_vfunctor(&vc, &b.closed, "0").unwrap();
        assert_eq!(h.obj("0").unwrap(), "1");
        assert_eq!(h.obj("1").unwrap(), "1");

        let t3 = build_trop(3).unwrap();
        let vc = self_vcategory(&t3.monoidal, &t3.closed).unwrap();
        let h = hom_vfunctor(&vc, &t3.closed, "1").unwrap();
        for (b, e) in [("0", "0"), ("1", "0"), ("2", "1")] {
            assert_eq!(h.obj(b).unwrap(), e);
        }
    }

    #[test]
    fn one_object_unit_category() {
        let t3 = build_trop(3).unwrap();
        let m = &t3.monoidal;
        let vc = VCategoryData {
            base_v: m.clone(),
            objects: BTreeSet::from(["A".to_string()]),
            hom_obj: BTreeMap::from([(p("A", "A"), m.unit.clone())]),
            comp: BTreeMap::from([(t("A", "A", "A"), m.l(&m.unit).unwrap())]),
            unit: BTreeMap::from([("A".to_string(), m.id(&m.unit).unwrap())]),
        };
        assert_eq!(check_vcategory(&vc).unwrap(), vec![]);
        let (cat, _) = underlying_category(&vc).unwrap();
        assert_eq!(cat.morphisms.len(), m.base.hom(&m.unit, &m.unit).len());
    }
}
