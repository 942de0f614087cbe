//! The correspondences cylinder ↔ tensored V-category ↔ tensor-closed
//! module, and the completion of a closed module to a closed bimodule.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::inverse;
use crate::monoidal::{transpose_pi_inv, varpi_inv, ClosedData};
use crate::tables::{p, t};
use crate::vcat::{associated_vcategory, TensoredData, VCategoryData};
use crate::vmodule::{confirm_unique, induced_vstructure, module_phibar, opposite_side, ClosedBimoduleData, TensorClosedModuleData, VModuleData};
use crate::vstruct::{induced_tensor_bifunctor, CylinderAssignment, PathAssignment, VStructureData};
use crate::Id;

pub use crate::vmodule::bimodule_completion;

/// Which side a bundle was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Module,
    Cylinder,
}

/// Both sides of the module/cylinder dictionary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorrespondenceBundle {
    pub vstructure: VStructureData,
    pub cylinder: CylinderAssignment,
    pub path: Option<PathAssignment>,
    pub module: TensorClosedModuleData,
    pub origin: Origin,
}

impl CorrespondenceBundle {
    pub fn from_module(tc: &TensorClosedModuleData, cl: &ClosedData) -> Result<Self> {
        let (vstructure, cylinder) = module_to_cylinder(tc, cl)?;
        Ok(Self { vstructure, cylinder, path: None, module: tc.clone(), origin: Origin::Module })
    }

    pub fn from_bimodule(cb: &ClosedBimoduleData, cl: &ClosedData) -> Result<Self> {
        let mut b = Self::from_module(&cb.closed_module.tensor_closed, cl)?;
        b.path = Some(module_to_path(cb, cl)?);
        Ok(b)
    }

    pub fn from_cylinder(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment) -> Result<Self> {
        let module = cylinder_to_module(vs, cl, cyl)?;
        Ok(Self { vstructure: vs.clone(), cylinder: cyl.clone(), path: None, module, origin: Origin::Cylinder })
    }
}

/// The tensored structure a cylinder gives the associated V-category.
pub fn cylinder_to_tensored(vs: &VStructureData, cyl: &CylinderAssignment) -> Result<(VCategoryData, TensoredData)> {
    let vc = associated_vcategory(vs)?;
    Ok((vc, TensoredData { tensor_obj: cyl.tensor_obj.clone(), phibar: cyl.phibar.clone() }))
}

/// `α_{K,X} = ϖ⁻¹(φ̄_{K,X,K⊗X} ∘ j_{K⊗X})`, keeping `K⊗X` and `φ̄`.
pub fn tensored_to_cylinder(vc: &VCategoryData, cl: &ClosedData, td: &TensoredData) -> Result<CylinderAssignment> {
    let m = &vc.base_v;
    let mut alpha = BTreeMap::new();
    for k in m.objects() {
        for x in vc.objects() {
            let kx = td.t(k, x)?;
            let u = m.seq(&[vc.j(&kx)?, td.phibar(k, x, &kx)?])?;
            alpha.insert(p(k, x), varpi_inv(m, cl, k, &vc.h(x, &kx)?, &u)?);
        }
    }
    Ok(CylinderAssignment { tensor_obj: td.tensor_obj.clone(), alpha, phibar: td.phibar.clone() })
}

/// Φ: the induced V-structure with `α = η` and `φ̄` from the module.
pub fn module_to_cylinder(tc: &TensorClosedModuleData, cl: &ClosedData) -> Result<(VStructureData, CylinderAssignment)> {
    let md = &tc.module;
    let vs = induced_vstructure(tc)?;
    let mut cyl = CylinderAssignment::default();
    for k in md.base_v.objects() {
        for x in md.objects() {
            cyl.tensor_obj.insert(p(k, x), md.t(k, x)?);
            cyl.alpha.insert(p(k, x), tc.eta(k, x)?);
            for y in md.objects() {
                cyl.phibar.insert(t(k, x, y), module_phibar(tc, cl, k, x, y)?);
            }
        }
    }
    Ok((vs, cyl))
}

/// The path assignment carried by the comodule side of a bimodule: Φ of
/// the opposite side, read back on `S`.
pub fn module_to_path(cb: &ClosedBimoduleData, cl: &ClosedData) -> Result<PathAssignment> {
    let (_, cyl) = module_to_cylinder(&opposite_side(cb), cl)?;
    Ok(PathAssignment { path_obj: cyl.tensor_obj, beta: cyl.alpha, psibar: cyl.phibar })
}

/// Ψ: the tensor-closed module of a cylinder assignment. `a` and `l` are
/// read off their natural families at identities and confirmed unique.
pub fn cylinder_to_module(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment) -> Result<TensorClosedModuleData> {
    let (m, s) = (&vs.base_v, &vs.base_s);
    let action = induced_tensor_bifunctor(vs, cl, cyl)?;
    let (obs, vobs) = (vs.objects(), m.objects());
    let mut phi = BTreeMap::new();
    for &k in &vobs {
        for &x in &obs {
            let kx = cyl.t(k, x)?;
            let alpha = cyl.alpha(k, x)?;
            for &y in &obs {
                for f in s.hom(&kx, y) {
                    let pf = vs.phi(f)?;
                    let u = m.seq(&[m.inv(&m.l(k)?)?, m.tm(&pf, &alpha)?, vs.b(x, &kx, y)?])?;
                    let other = varpi_inv(m, cl, k, &vs.h(x, y)?, &m.seq(&[pf, cyl.phibar(k, x, y)?])?)?;
                    if u != other {
                        return Err(Error::EngineBug {
                            law: "derived.cylinder-module-phi".into(),
                            site: vec![k.into(), x.into(), f.into()],
                            detail: format!("composite {u} vs transported {other}"),
                        });
                    }
                    phi.insert(t(k, x, f), u);
                }
            }
        }
    }
    let mut tc = TensorClosedModuleData {
        module: VModuleData { base_v: m.clone(), base_s: s.clone(), action, ..Default::default() },
        hom: vs.hom.clone(),
        phi,
    };
    let mut assoc = BTreeMap::new();
    for &k in &vobs {
        for &l in &vobs {
            for &x in &obs {
                let md = &tc.module;
                let lx = md.t(l, x)?;
                let src = md.t(&m.t(k, l)?, x)?;
                let dst = md.t(k, &lx)?;
                // S(K⊗(L⊗X), Y) → S((K⊗L)⊗X, Y)
                let tau = |y: &str, f: &str| -> Result<Id> {
                    let g = m.seq(&[tc.phi(k, &lx, f)?, cyl.phibar(l, x, y)?])?;
                    tc.phi_inv(&m.t(k, l)?, x, y, &transpose_pi_inv(m, cl, l, &vs.h(x, y)?, &g)?)
                };
                let a = tau(&dst, s.id(&dst)?)?;
                confirm_unique("module associator", &[k, l, x], s.hom(&src, &dst), &a, |cand| {
                    for &y in &obs {
                        for f in s.hom(&dst, y) {
                            if s.comp(cand, f)? != tau(y, f)? {
                                return Ok(false);
                            }
                        }
                    }
                    Ok(true)
                })?;
                assoc.insert(t(k, l, x), a);
            }
        }
    }
    tc.module.assoc = assoc;
    let mut lunit = BTreeMap::new();
    for &x in &obs {
        let ix = tc.module.t(&m.unit, x)?;
        let tau = |y: &str, f: &str| tc.phi_inv(&m.unit, x, y, &vs.phi(f)?);
        let l = tau(x, s.id(x)?)?;
        confirm_unique("module left unit", &[x], s.hom(&ix, x), &l, |cand| {
            for &y in &obs {
                for f in s.hom(x, y) {
                    if s.comp(cand, f)? != tau(y, f)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        inverse(s, &l)?;
        lunit.insert(x.to_string(), l);
    }
    tc.module.lunit = lunit;
    Ok(tc)
}

/// Ψ(Φ(tc)) = tc as tables.
pub fn roundtrip_module_cylinder(tc: &TensorClosedModuleData, cl: &ClosedData) -> Result<bool> {
    let (vs, cyl) = module_to_cylinder(tc, cl)?;
    Ok(cylinder_to_module(&vs, cl, &cyl)? == *tc)
}

/// Φ(Ψ(vs, cyl)) = (vs, cyl) as tables.
pub fn roundtrip_cylinder_module(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment) -> Result<bool> {
    let tc = cylinder_to_module(vs, cl, cyl)?;
    let (vs2, cyl2) = module_to_cylinder(&tc, cl)?;
    Ok(vs2 == *vs && cyl2 == *cyl)
}

/// tensored_to_cylinder ∘ cylinder_to_tensored = id as tables.
pub fn roundtrip_cylinder_tensored(vs: &VStructureData, cl: &ClosedData, cyl: &CylinderAssignment) -> Result<bool> {
    let (vc, td) = cylinder_to_tensored(vs, cyl)?;
    Ok(tensored_to_cylinder(&vc, cl, &td)? == *cyl)
}
