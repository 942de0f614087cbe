//! Finite categories as explicit tables.
//!
//! Composition convention: `comp(f, g)` is "g after f", so `g·f`
//! is written `comp(f, g)` and a path `[f, g, h]` means `h·g·f`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{CheckReport, Reports};
use crate::tables::{entries, p, unique_set, Pair};
use crate::Id;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub src: Id,
    pub dst: Id,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCategory {
    #[serde(with = "unique_set")]
    pub objects: BTreeSet<Id>,
    #[serde(with = "entries")]
    pub morphisms: BTreeMap<Id, Arrow>,
    #[serde(with = "entries")]
    pub identity: BTreeMap<Id, Id>,
    #[serde(with = "entries")]
    pub comp: BTreeMap<Pair, Id>,
}

/// Reserved identity name for an object.
pub fn identity_id(x: &str) -> Id {
    format!("id:{x}")
}

pub fn pair_object(x: &str, y: &str) -> Id {
    format!("({x},{y})")
}

impl FinCategory {
    /// Builds a category from its objects, non-identity morphisms and a rule
    /// for composing non-identity pairs. Identities and their composites are
    /// filled in automatically.
    pub fn from_fn<F>(objects: &[&str], morphisms: &[(&str, &str, &str)], compose: F) -> Self
    where
        F: Fn(&str, &str) -> String,
    {
        let mut cat = FinCategory::default();
        for x in objects {
            let i = identity_id(x);
            cat.objects.insert(x.to_string());
            cat.morphisms.insert(i.clone(), Arrow { src: x.to_string(), dst: x.to_string() });
            cat.identity.insert(x.to_string(), i);
        }
        for (f, s, d) in morphisms {
            cat.morphisms.insert(f.to_string(), Arrow { src: s.to_string(), dst: d.to_string() });
        }
        let arrows: Vec<(Id, Arrow)> = cat.morphisms.clone().into_iter().collect();
        for (f, af) in &arrows {
            for (g, ag) in &arrows {
                if af.dst != ag.src {
                    continue;
                }
                let h = if cat.identity[&af.dst] == *g {
                    f.clone()
                } else if cat.identity[&af.src] == *f {
                    g.clone()
                } else {
                    compose(f, g)
                };
                cat.comp.insert(p(f, g), h);
            }
        }
        cat
    }

    pub fn arrow(&self, f: &str) -> Result<&Arrow> {
        self.morphisms.get(f).ok_or_else(|| Error::MalformedReference {
            table: "morphisms".into(),
            id: f.to_string(),
        })
    }

    pub fn src(&self, f: &str) -> Result<&str> {
        Ok(&self.arrow(f)?.src)
    }

    pub fn dst(&self, f: &str) -> Result<&str> {
        Ok(&self.arrow(f)?.dst)
    }

    pub fn id(&self, x: &str) -> Result<&str> {
        self.identity.get(x).map(|s| s.as_str()).ok_or_else(|| Error::missing("identity", x))
    }

    pub fn is_identity(&self, f: &str) -> bool {
        self.morphisms
            .get(f)
            .map(|a| self.identity.get(&a.src).map(|i| i == f).unwrap_or(false))
            .unwrap_or(false)
    }

    /// `g` after `f`.
    pub fn comp(&self, f: &str, g: &str) -> Result<Id> {
        if self.dst(f)? != self.src(g)? {
            return Err(Error::NotComposable { f: f.to_string(), g: g.to_string() });
        }
        self.comp.get(&p(f, g)).cloned().ok_or_else(|| Error::missing("comp", (f, g)))
    }

    /// Left fold of `comp` along a path, first morphism applied first.
    pub fn path<S: AsRef<str>>(&self, path: &[S]) -> Result<Id> {
        compose_path(self, path)
    }

    /// `Hom(x, y)`, lexicographic by morphism id.
    pub fn hom(&self, x: &str, y: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|(_, a)| a.src == x && a.dst == y)
            .map(|(f, _)| f.as_str())
            .collect()
    }

    pub fn has(&self, x: &str, y: &str) -> bool {
        self.morphisms.values().any(|a| a.src == x && a.dst == y)
    }

    fn outgoing(&self) -> BTreeMap<&str, Vec<&str>> {
        let mut out: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for x in &self.objects {
            out.insert(x, Vec::new());
        }
        for (f, a) in &self.morphisms {
            out.entry(a.src.as_str()).or_default().push(f);
        }
        out
    }

    /// All composable pairs `(f, g)` with `dst f = src g`.
    pub fn composable_pairs(&self) -> Vec<(&str, &str)> {
        let out = self.outgoing();
        let mut v = Vec::new();
        for (f, a) in &self.morphisms {
            for g in out.get(a.dst.as_str()).into_iter().flatten() {
                v.push((f.as_str(), *g));
            }
        }
        v
    }

    /// Every table refers to declared ids only.
    pub fn check_references(&self) -> Result<()> {
        let bad = |table: &str, id: &str| Error::MalformedReference { table: table.into(), id: id.into() };
        for a in self.morphisms.values() {
            for x in [&a.src, &a.dst] {
                if !self.objects.contains(x) {
                    return Err(bad("morphisms", x));
                }
            }
        }
        for (x, i) in &self.identity {
            if !self.objects.contains(x) {
                return Err(bad("identity", x));
            }
            if !self.morphisms.contains_key(i) {
                return Err(bad("identity", i));
            }
        }
        for ((f, g), h) in &self.comp {
            for m in [f, g, h] {
                if !self.morphisms.contains_key(m) {
                    return Err(bad("comp", m));
                }
            }
        }
        Ok(())
    }
}

/// Empty iff all category axioms hold.
pub fn validate_category(cat: &FinCategory) -> Result<Vec<CheckReport>> {
    cat.check_references()?;
    let mut r = Reports::default();
    let mut typed_ok = true;
    for x in &cat.objects {
        match cat.identity.get(x) {
            None => {
                r.push(CheckReport::count("category.identity", &[x], 0));
                typed_ok = false;
            }
            Some(i) => {
                let a = cat.arrow(i)?;
                if a.src != *x || a.dst != *x {
                    r.push(CheckReport::mismatch("category.identity", &[x], i, &format!("{}->{}", a.src, a.dst)));
                    typed_ok = false;
                }
            }
        }
    }
    if !typed_ok {
        return Ok(r.finish());
    }
    let pairs = cat.composable_pairs();
    let mut well_typed: BTreeSet<(&str, &str)> = BTreeSet::new();
    for &(f, g) in &pairs {
        let Some(h) = cat.comp.get(&p(f, g)) else {
            r.push(CheckReport::count("category.total", &[f, g], 0));
            continue;
        };
        let (af, ag, ah) = (cat.arrow(f)?, cat.arrow(g)?, cat.arrow(h)?);
        let typed = ah.src == af.src && ah.dst == ag.dst;
        if typed {
            well_typed.insert((f, g));
        }
        if cat.is_identity(g) {
            r.eq("category.unit", &[f, g], h, f);
        } else if cat.is_identity(f) {
            r.eq("category.unit", &[f, g], h, g);
        } else if !typed {
            let expected = format!("{}->{}", af.src, ag.dst);
            r.push(CheckReport::mismatch("category.typing", &[f, g], &format!("{}->{}", ah.src, ah.dst), &expected));
        }
    }
    for ((f, g), _) in &cat.comp {
        if cat.arrow(f)?.dst != cat.arrow(g)?.src {
            r.push(CheckReport::count("category.typing", &[f, g], 0));
        }
    }
    let out = cat.outgoing();
    for &(f, g) in &pairs {
        if !well_typed.contains(&(f, g)) {
            continue;
        }
        let fg = &cat.comp[&p(f, g)];
        for &h in out.get(cat.arrow(g)?.dst.as_str()).into_iter().flatten() {
            if !well_typed.contains(&(g, h)) {
                continue;
            }
            let gh = &cat.comp[&p(g, h)];
            let (Some(l), Some(rr)) = (cat.comp.get(&p(fg, h)), cat.comp.get(&p(f, gh))) else {
                continue;
            };
            r.eq("category.assoc", &[f, g, h], l, rr);
        }
    }
    Ok(r.finish())
}

/// Left fold of `comp`; a singleton path returns its element.
pub fn compose_path<S: AsRef<str>>(cat: &FinCategory, path: &[S]) -> Result<Id> {
    let (first, rest) = path.split_first().ok_or_else(|| Error::Parameter("empty path".into()))?;
    let first = first.as_ref();
    cat.arrow(first)?;
    let mut acc = first.to_string();
    for (i, g) in rest.iter().enumerate() {
        let g = g.as_ref();
        if cat.dst(&acc)? != cat.src(g)? {
            return Err(Error::NonComposable { index: i });
        }
        acc = cat.comp(&acc, g)?;
    }
    Ok(acc)
}

/// Name of the pair `(f, g)` in `product_category(a, b)`.
pub fn pair_morphism(a: &FinCategory, b: &FinCategory, f: &str, g: &str) -> Result<Id> {
    if a.is_identity(f) && b.is_identity(g) {
        Ok(identity_id(&pair_object(a.src(f)?, b.src(g)?)))
    } else {
        Ok(format!("({f},{g})"))
    }
}

pub fn product_category(a: &FinCategory, b: &FinCategory) -> Result<FinCategory> {
    let mut out = FinCategory::default();
    let mut names: BTreeMap<(&str, &str), Id> = BTreeMap::new();
    for x in &a.objects {
        for y in &b.objects {
            let o = pair_object(x, y);
            out.objects.insert(o.clone());
            out.identity.insert(o.clone(), identity_id(&o));
        }
    }
    for (f, af) in &a.morphisms {
        for (g, ag) in &b.morphisms {
            let n = pair_morphism(a, b, f, g)?;
            out.morphisms.insert(
                n.clone(),
                Arrow { src: pair_object(&af.src, &ag.src), dst: pair_object(&af.dst, &ag.dst) },
            );
            names.insert((f, g), n);
        }
    }
    for (f, f2) in a.composable_pairs() {
        for (g, g2) in b.composable_pairs() {
            let hf = a.comp(f, f2)?;
            let hg = b.comp(g, g2)?;
            let h = names
                .get(&(hf.as_str(), hg.as_str()))
                .ok_or_else(|| Error::MalformedReference { table: "comp".into(), id: format!("{hf}/{hg}") })?;
            out.comp.insert(p(&names[&(f, g)], &names[&(f2, g2)]), h.clone());
        }
    }
    Ok(out)
}

pub fn opposite_category(a: &FinCategory) -> FinCategory {
    FinCategory {
        objects: a.objects.clone(),
        morphisms: a
            .morphisms
            .iter()
            .map(|(f, ar)| (f.clone(), Arrow { src: ar.dst.clone(), dst: ar.src.clone() }))
            .collect(),
        identity: a.identity.clone(),
        comp: a.comp.iter().map(|((f, g), h)| ((g.clone(), f.clone()), h.clone())).collect(),
    }
}

/// The two-sided inverse of `f`, if any.
pub fn morphism_inverse(cat: &FinCategory, f: &str) -> Result<Option<Id>> {
    let a = cat.arrow(f)?;
    let (ids, idd) = (cat.id(&a.src)?, cat.id(&a.dst)?);
    let mut found: Vec<&str> = Vec::new();
    for g in cat.hom(&a.dst, &a.src) {
        if cat.comp(f, g)? == ids && cat.comp(g, f)? == idd {
            found.push(g);
        }
    }
    match found.as_slice() {
        [] => Ok(None),
        [g] => Ok(Some(g.to_string())),
        _ => Err(Error::Ambiguous { what: "inverse".into(), detail: format!("{f} has inverses {found:?}") }),
    }
}

/// Inverse of an isomorphism, or an error naming the morphism.
pub fn inverse(cat: &FinCategory, f: &str) -> Result<Id> {
    morphism_inverse(cat, f)?.ok_or_else(|| Error::InverseAbsent(f.to_string()))
}

/// Table equality after canonical normalization. All tables are ordered
/// maps, so normalization is already built into the representation.
pub fn structural_equal<T: PartialEq>(a: &T, b: &T) -> bool {
    a == b
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorData {
    #[serde(with = "entries")]
    pub on_objects: BTreeMap<Id, Id>,
    #[serde(with = "entries")]
    pub on_morphisms: BTreeMap<Id, Id>,
}

impl FunctorData {
    pub fn obj(&self, x: &str) -> Result<&str> {
        self.on_objects.get(x).map(|s| s.as_str()).ok_or_else(|| Error::missing("onObjects", x))
    }

    pub fn mor(&self, f: &str) -> Result<&str> {
        self.on_morphisms.get(f).map(|s| s.as_str()).ok_or_else(|| Error::missing("onMorphisms", f))
    }
}

/// Empty iff `func` preserves typing, identities and composition.
pub fn check_functor(src: &FinCategory, dst: &FinCategory, func: &FunctorData) -> Result<Vec<CheckReport>> {
    let mut r = Reports::default();
    for x in &src.objects {
        let fx = func.obj(x)?;
        if !dst.objects.contains(fx) {
            return Err(Error::MalformedReference { table: "onObjects".into(), id: fx.into() });
        }
    }
    let mut typed = true;
    for (f, a) in &src.morphisms {
        let ff = func.mor(f)?;
        let b = dst.arrow(ff)?;
        let (s, d) = (func.obj(&a.src)?, func.obj(&a.dst)?);
        if b.src != s || b.dst != d {
            typed = false;
            r.push(CheckReport::mismatch(
                "functor.typing",
                &[f],
                &format!("{}->{}", b.src, b.dst),
                &format!("{s}->{d}"),
            ));
        }
    }
    if !typed {
        return Ok(r.finish());
    }
    for x in &src.objects {
        r.eq("functor.identity", &[x], func.mor(src.id(x)?)?, dst.id(func.obj(x)?)?);
    }
    for (f, g) in src.composable_pairs() {
        let lhs = func.mor(&src.comp(f, g)?)?.to_string();
        let rhs = dst.comp(func.mor(f)?, func.mor(g)?)?;
        r.eq("functor.composition", &[f, g], &lhs, &rhs);
    }
    Ok(r.finish())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatTransData {
    pub source: FunctorData,
    pub target: FunctorData,
    #[serde(with = "entries")]
    pub components: BTreeMap<Id, Id>,
}

/// Empty iff every naturality square commutes.
pub fn check_nat(src: &FinCategory, dst: &FinCategory, n: &NatTransData) -> Result<Vec<CheckReport>> {
    let mut r = Reports::default();
    let comp = |x: &str| n.components.get(x).map(|s| s.as_str()).ok_or_else(|| Error::missing("components", x));
    for x in &src.objects {
        let a = dst.arrow(comp(x)?)?;
        if a.src != n.source.obj(x)? || a.dst != n.target.obj(x)? {
            return Err(Error::ShapeMismatch(format!("component at {x} has type {}->{}", a.src, a.dst)));
        }
    }
    for (f, a) in &src.morphisms {
        let lhs = dst.comp(n.source.mor(f)?, comp(&a.dst)?)?;
        let rhs = dst.comp(comp(&a.src)?, n.target.mor(f)?)?;
        r.eq("nat.naturality", &[f], &lhs, &rhs);
    }
    Ok(r.finish())
}

/// A functor out of a product category, keyed by pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bifunctor {
    #[serde(with = "entries")]
    pub on_objects: BTreeMap<Pair, Id>,
    #[serde(with = "entries")]
    pub on_morphisms: BTreeMap<Pair, Id>,
}

impl Bifunctor {
    pub fn obj(&self, x: &str, y: &str) -> Result<&str> {
        self.on_objects.get(&p(x, y)).map(|s| s.as_str()).ok_or_else(|| Error::missing("onObjects", (x, y)))
    }

    pub fn mor(&self, f: &str, g: &str) -> Result<&str> {
        self.on_morphisms.get(&p(f, g)).map(|s| s.as_str()).ok_or_else(|| Error::missing("onMorphisms", (f, g)))
    }

    /// The same functor on `product_category(a, b)`.
    pub fn to_functor(&self, a: &FinCategory, b: &FinCategory) -> Result<FunctorData> {
        let mut out = FunctorData::default();
        for ((x, y), v) in &self.on_objects {
            out.on_objects.insert(pair_object(x, y), v.clone());
        }
        for ((f, g), v) in &self.on_morphisms {
            out.on_morphisms.insert(pair_morphism(a, b, f, g)?, v.clone());
        }
        Ok(out)
    }
}

/// Empty iff `bf` is a functor `a × b → c`.
pub fn check_bifunctor(a: &FinCategory, b: &FinCategory, c: &FinCategory, bf: &Bifunctor) -> Result<Vec<CheckReport>> {
    check_functor(&product_category(a, b)?, c, &bf.to_functor(a, b)?)
}
