//! Structure files: one JSON object per structure, tagged by `kind`.
//!
//! Categories (and monads, which in spans are categories) are given by
//! `objects`, `homs`, `identities` and `composition` rows
//! `[x, y, z, g, f, g∘f]`. Cells of spans are rows `[x, y, element, image]`
//! with composite elements rendered as `a|pivot|b`. Functors are an object
//! map plus rows `[src, tgt, arrow, image]`; arrows and objects of a
//! product category are written as pair tags `(a,b)`. Structure-cell
//! families are rows listing the key followed by the component.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::canonical::to_canonical;
use crate::correspond::{EFamily, MonadOnAB};
use crate::fincore::{check_atom, product, Atom, FinCategory, FinFunction, FinFunctor, FinSet};
use crate::monadwarp::{monad_to_category, validate_span_monad, MwMonad, SpanMonad, Warping, Wreath};
use crate::skew::{CellFamily, SkewAlgebra, SkewBicategory, SkewWarping};
use crate::spaneng::{compose_spans, identity_span, Cell2, PathElem, Span};
use crate::{Error, Result, ValidationReport};

type CompTable = BTreeMap<(Atom, Atom, Atom), BTreeMap<(Atom, Atom), Atom>>;

/// Kinds of structure file.
pub const KINDS: [&str; 9] = [
    "category",
    "monad",
    "warping",
    "mw_monad",
    "wreath",
    "algebra",
    "skew_bicategory",
    "skew_warping",
    "skew_algebra",
];

/// A monad in spans, stored as its category table (arrow names are rendered
/// carrier elements). `over` records `(B, A)` when the carrier is `AB`; a
/// file without it is read as a monad over itself with `A = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonadTable {
    pub table: FinCategory,
    pub over: Option<(SpanMonad, Span)>,
}

/// A parsed structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Category(FinCategory),
    Monad(MonadTable),
    Warping(Warping),
    MwMonad(MwMonad),
    Wreath(Wreath),
    Algebra(EFamily),
    SkewBicategory(SkewBicategory),
    SkewWarping(SkewWarping),
    SkewAlgebra(SkewAlgebra),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Category(_) => "category",
            Structure::Monad(_) => "monad",
            Structure::Warping(_) => "warping",
            Structure::MwMonad(_) => "mw_monad",
            Structure::Wreath(_) => "wreath",
            Structure::Algebra(_) => "algebra",
            Structure::SkewBicategory(_) => "skew_bicategory",
            Structure::SkewWarping(_) => "skew_warping",
            Structure::SkewAlgebra(_) => "skew_algebra",
        }
    }
}

// ---- documents ----

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomDoc {
    src: String,
    tgt: String,
    arrows: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryBody {
    objects: Vec<String>,
    homs: Vec<HomDoc>,
    identities: BTreeMap<String, String>,
    composition: Vec<[String; 6]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryFile {
    kind: String,
    objects: Vec<String>,
    homs: Vec<HomDoc>,
    identities: BTreeMap<String, String>,
    composition: Vec<[String; 6]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    src: String,
    tgt: String,
    elements: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OverDoc {
    base: CategoryBody,
    endo: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonadFile {
    kind: String,
    objects: Vec<String>,
    homs: Vec<HomDoc>,
    identities: BTreeMap<String, String>,
    composition: Vec<[String; 6]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    over: Option<OverDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WarpingFile {
    kind: String,
    base: CategoryBody,
    endo: Vec<EntryDoc>,
    t: Vec<[String; 4]>,
    k: Vec<[String; 4]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WreathFile {
    kind: String,
    base: CategoryBody,
    endo: Vec<EntryDoc>,
    d: Vec<[String; 4]>,
    q: Vec<[String; 4]>,
    j: Vec<[String; 4]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MwBody {
    base: CategoryBody,
    obj_map: BTreeMap<String, String>,
    ext: Vec<[String; 4]>,
    unit: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MwFile {
    kind: String,
    base: CategoryBody,
    obj_map: BTreeMap<String, String>,
    ext: Vec<[String; 4]>,
    unit: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    kind: String,
    monad: MwBody,
    object: String,
    action: Vec<[String; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctorDoc {
    objects: BTreeMap<String, String>,
    arrows: Vec<[String; 4]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewHomDoc {
    src: String,
    tgt: String,
    category: CategoryBody,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewCompDoc {
    src: String,
    mid: String,
    tgt: String,
    functor: FunctorDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewBody {
    objects: Vec<String>,
    homs: Vec<SkewHomDoc>,
    composition: Vec<SkewCompDoc>,
    units: BTreeMap<String, String>,
    assoc: Vec<Vec<String>>,
    left_unitor: Vec<Vec<String>>,
    right_unitor: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewFile {
    kind: String,
    objects: Vec<String>,
    homs: Vec<SkewHomDoc>,
    composition: Vec<SkewCompDoc>,
    units: BTreeMap<String, String>,
    assoc: Vec<Vec<String>>,
    left_unitor: Vec<Vec<String>>,
    right_unitor: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtDoc {
    src: String,
    tgt: String,
    functor: FunctorDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewWarpingBody {
    base: SkewBody,
    obj_map: BTreeMap<String, String>,
    ext: Vec<ExtDoc>,
    k: BTreeMap<String, String>,
    nu: Vec<Vec<String>>,
    nu0: Vec<Vec<String>>,
    kappa: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewWarpingFile {
    kind: String,
    base: SkewBody,
    obj_map: BTreeMap<String, String>,
    ext: Vec<ExtDoc>,
    k: BTreeMap<String, String>,
    nu: Vec<Vec<String>>,
    nu0: Vec<Vec<String>>,
    kappa: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EDoc {
    object: String,
    functor: FunctorDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewAlgebraFile {
    kind: String,
    warping: SkewWarpingBody,
    object: String,
    e: Vec<EDoc>,
    nu: Vec<Vec<String>>,
    kappa: Vec<Vec<String>>,
}

// ---- helpers ----

fn field_err(locus: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse {
        locus: locus.into(),
        message: e.to_string(),
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse {
        locus: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn objects_set(objects: &[String], locus: &str) -> Result<FinSet> {
    for o in objects {
        check_atom(o).map_err(|e| field_err(locus, e))?;
    }
    let mut v = objects.to_vec();
    v.sort();
    FinSet::new(v).map_err(|e| field_err(locus, e))
}

fn sorted_rows<const N: usize>(mut rows: Vec<[String; N]>) -> Vec<[String; N]> {
    rows.sort();
    rows
}

fn category_body(c: &FinCategory) -> CategoryBody {
    let mut objects = c.objects().elements().to_vec();
    objects.sort();
    let homs = c
        .homs()
        .iter()
        .filter(|(_, s)| !s.is_empty())
        .map(|((x, y), s)| HomDoc {
            src: x.clone(),
            tgt: y.clone(),
            arrows: s.sorted().elements().to_vec(),
        })
        .collect();
    let mut composition = Vec::new();
    for ((x, y, z), table) in c.comp_table() {
        for ((g, f), h) in table {
            composition.push([x, y, z, g, f, h].map(|s| s.clone()));
        }
    }
    CategoryBody {
        objects,
        homs,
        identities: c.identities().clone(),
        composition: sorted_rows(composition),
    }
}

/// Reads a category table; `atoms` requires names to be plain atoms.
fn category_of(
    objects: &[String],
    homs: &[HomDoc],
    identities: &BTreeMap<String, String>,
    composition: &[[String; 6]],
    atoms: bool,
    locus: &str,
) -> Result<FinCategory> {
    let obs = objects_set(objects, &format!("{locus}objects"))?;
    let mut hom_map = BTreeMap::new();
    for h in homs {
        let l = format!("{locus}homs ({},{})", h.src, h.tgt);
        if !obs.contains(&h.src) || !obs.contains(&h.tgt) {
            return Err(field_err(&l, "unknown object"));
        }
        if atoms {
            for a in &h.arrows {
                check_atom(a).map_err(|e| field_err(&l, e))?;
            }
        }
        let set = FinSet::new(h.arrows.clone()).map_err(|e| field_err(&l, e))?;
        if hom_map.insert((h.src.clone(), h.tgt.clone()), set).is_some() {
            return Err(field_err(&l, "hom listed twice"));
        }
    }
    let mut comp: CompTable = BTreeMap::new();
    for row in composition {
        let [x, y, z, g, f, h] = row.clone();
        let prev = comp
            .entry((x.clone(), y.clone(), z.clone()))
            .or_default()
            .insert((g.clone(), f.clone()), h);
        if prev.is_some() {
            return Err(field_err(
                &format!("{locus}composition"),
                format!("composite {g}∘{f} at ({x},{y},{z}) listed twice"),
            ));
        }
    }
    Ok(FinCategory::from_parts(obs, hom_map, comp, identities.clone()))
}

fn category_from_body(b: &CategoryBody, atoms: bool, locus: &str) -> Result<FinCategory> {
    category_of(&b.objects, &b.homs, &b.identities, &b.composition, atoms, locus)
}

fn parse_elem(s: &str, locus: &str) -> Result<PathElem> {
    PathElem::parse(s).map_err(|e| field_err(locus, e))
}

/// Carrier, multiplication and unit of a category table whose arrow names
/// are rendered path elements. Laws are not checked.
pub fn monad_cells(c: &FinCategory) -> Result<(Span, Cell2, Cell2)> {
    let mut entries = BTreeMap::new();
    let mut arity = None;
    for ((x, y), s) in c.homs() {
        let elems = s.iter().map(|a| parse_elem(a, "homs")).collect::<Result<Vec<_>>>()?;
        if let Some(e) = elems.first() {
            arity.get_or_insert(e.arity());
        }
        entries.insert(
            (x.clone(), y.clone()),
            FinSet::new(elems).map_err(|e| field_err("homs", e))?,
        );
    }
    let n = arity.unwrap_or(1);
    let obs = c.objects().clone();
    let carrier = Span::from_entries(obs.clone(), obs.clone(), n, entries).map_err(|e| field_err("homs", e))?;
    let bb = compose_spans(&carrier, &carrier)?;
    let mult = Cell2::from_fn(bb, carrier.clone(), |x, z, e| {
        let (f, g) = (e.slice(0, n), e.slice(n, n));
        let y = e.object_after(n, x, z);
        let h = c.compose_names(x, y, z, &g.render(), &f.render())?;
        PathElem::parse(h).ok()
    })
    .map_err(|e| field_err("composition", e))?;
    let unit = Cell2::from_fn(identity_span(&obs), carrier.clone(), |x, _, _| {
        PathElem::parse(c.identity_name(x)?).ok()
    })
    .map_err(|e| field_err("identities", e))?;
    Ok((carrier, mult, unit))
}

/// The lawful span monad of a category table.
pub fn span_monad_of(c: &FinCategory) -> Result<SpanMonad> {
    let (carrier, mult, unit) = monad_cells(c)?;
    let r = validate_span_monad(&carrier, &mult, &unit);
    if !r.is_structurally_sound() {
        return Err(Error::Malformed(r.summary()));
    }
    if !r.is_valid() {
        return Err(Error::invalid("base monad", &r));
    }
    SpanMonad::new(carrier, mult, unit)
}

fn base_monad(b: &CategoryBody, locus: &str) -> Result<SpanMonad> {
    let c = category_from_body(b, false, locus)?;
    let r = crate::fincore::validate_category(&c);
    if !r.is_structurally_sound() {
        return Err(field_err(locus, r.summary()));
    }
    span_monad_of(&c)
}

fn span_docs(s: &Span) -> Vec<EntryDoc> {
    s.entries()
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|((x, y), v)| EntryDoc {
            src: x.clone(),
            tgt: y.clone(),
            elements: v.iter().map(PathElem::render).collect(),
        })
        .collect()
}

fn span_from_docs(objects: &FinSet, docs: &[EntryDoc], locus: &str) -> Result<Span> {
    let mut entries = BTreeMap::new();
    let mut arity = None;
    for d in docs {
        let l = format!("{locus} ({},{})", d.src, d.tgt);
        let elems = d
            .elements
            .iter()
            .map(|s| parse_elem(s, &l))
            .collect::<Result<Vec<_>>>()?;
        if let Some(e) = elems.first() {
            arity.get_or_insert(e.arity());
        }
        let set = FinSet::new(elems).map_err(|e| field_err(&l, e))?;
        if entries.insert((d.src.clone(), d.tgt.clone()), set).is_some() {
            return Err(field_err(&l, "entry listed twice"));
        }
    }
    Span::from_entries(objects.clone(), objects.clone(), arity.unwrap_or(1), entries).map_err(|e| field_err(locus, e))
}

fn cell_rows(c: &Cell2) -> Vec<[String; 4]> {
    let mut rows = Vec::new();
    for ((x, y), f) in c.components() {
        for (e, img) in f.pairs() {
            rows.push([x.clone(), y.clone(), e.render(), img.render()]);
        }
    }
    sorted_rows(rows)
}

fn cell_from_rows(dom: Span, cod: Span, rows: &[[String; 4]], locus: &str) -> Result<Cell2> {
    let mut map = BTreeMap::new();
    for [x, y, e, img] in rows {
        let e = parse_elem(e, locus)?;
        if !dom.entry(x, y).contains(&e) {
            return Err(field_err(locus, format!("({x},{y}) has no element {e} in the domain")));
        }
        let img = parse_elem(img, locus)?;
        if map.insert((x.clone(), y.clone(), e.clone()), img).is_some() {
            return Err(field_err(locus, format!("element {e} at ({x},{y}) listed twice")));
        }
    }
    Cell2::from_fn(dom, cod, |x, y, e| {
        map.get(&(x.to_string(), y.to_string(), e.clone())).cloned()
    })
    .map_err(|e| field_err(locus, e))
}

fn function_from_map(dom: &FinSet, cod: &FinSet, map: &BTreeMap<String, String>, locus: &str) -> Result<FinFunction> {
    FinFunction::new(dom.clone(), cod.clone(), map.clone()).map_err(|e| field_err(locus, e))
}

fn mw_body(m: &MwMonad) -> MwBody {
    let mut ext = Vec::new();
    for ((x, y), f) in &m.ext {
        for (a, b) in f.pairs() {
            ext.push([x.clone(), y.clone(), a.clone(), b.clone()]);
        }
    }
    MwBody {
        base: category_body(&m.base),
        obj_map: m.obj_map.pairs().map(|(a, b)| (a.clone(), b.clone())).collect(),
        ext: sorted_rows(ext),
        unit: m.unit_arrows.clone(),
    }
}

fn mw_from_body(b: MwBody, locus: &str) -> Result<MwMonad> {
    let c = category_from_body(&b.base, true, &format!("{locus}base."))?;
    let r = crate::fincore::validate_category(&c);
    if !r.is_structurally_sound() {
        return Err(field_err(&format!("{locus}base"), r.summary()));
    }
    let obs = c.objects().clone();
    let t = function_from_map(&obs, &obs, &b.obj_map, &format!("{locus}obj_map"))?;
    let mut rows: BTreeMap<(Atom, Atom), BTreeMap<Atom, Atom>> = BTreeMap::new();
    for [x, y, f, g] in b.ext {
        if rows
            .entry((x.clone(), y.clone()))
            .or_default()
            .insert(f.clone(), g)
            .is_some()
        {
            return Err(field_err(
                &format!("{locus}ext"),
                format!("{f} at ({x},{y}) listed twice"),
            ));
        }
    }
    let mut ext = BTreeMap::new();
    for x in &obs {
        for y in &obs {
            let (tx, ty) = (t.apply(x), t.apply(y));
            let map = rows.remove(&(x.clone(), y.clone())).unwrap_or_default();
            let f = function_from_map(c.hom(x, ty), c.hom(tx, ty), &map, &format!("{locus}ext ({x},{y})"))?;
            ext.insert((x.clone(), y.clone()), f);
        }
    }
    if let Some(((x, y), _)) = rows.into_iter().next() {
        return Err(field_err(&format!("{locus}ext"), format!("unknown pair ({x},{y})")));
    }
    for x in &obs {
        if !b.unit.contains_key(x) {
            return Err(field_err(&format!("{locus}unit"), format!("no unit at {x}")));
        }
    }
    Ok(MwMonad {
        base: c,
        obj_map: t,
        ext,
        unit_arrows: b.unit,
    })
}

fn functor_doc(f: &FinFunctor) -> FunctorDoc {
    let mut arrows = Vec::new();
    for a in f.dom().arrows() {
        let img = f.apply(&a).map(|b| b.name).unwrap_or_default();
        arrows.push([a.src, a.tgt, a.name, img]);
    }
    FunctorDoc {
        objects: f.obj_map().pairs().map(|(a, b)| (a.clone(), b.clone())).collect(),
        arrows: sorted_rows(arrows),
    }
}

fn functor_from_doc(dom: &FinCategory, cod: &FinCategory, d: &FunctorDoc, locus: &str) -> Result<FinFunctor> {
    let mut arrows = BTreeMap::new();
    for [s, t, n, img] in &d.arrows {
        if arrows.insert((s.clone(), t.clone(), n.clone()), img.clone()).is_some() {
            return Err(field_err(locus, format!("arrow {n}:{s}->{t} listed twice")));
        }
    }
    FinFunctor::tabulate(
        dom,
        cod,
        |x| d.objects.get(x).cloned(),
        |a| arrows.get(&(a.src.clone(), a.tgt.clone(), a.name.clone())).cloned(),
    )
    .map_err(|e| field_err(locus, e))
}

fn family_rows(f: &CellFamily) -> Vec<Vec<String>> {
    let mut rows: Vec<Vec<String>> = f
        .iter()
        .map(|(k, v)| {
            let mut row = k.clone();
            row.push(v.clone());
            row
        })
        .collect();
    rows.sort();
    rows
}

fn family_from_rows(rows: &[Vec<String>], key_len: usize, locus: &str) -> Result<CellFamily> {
    let mut f = CellFamily::new();
    for row in rows {
        if row.len() != key_len + 1 {
            return Err(field_err(
                locus,
                format!("row {row:?} should have {} entries", key_len + 1),
            ));
        }
        let (v, k) = row.split_last().expect("non-empty");
        if f.insert(k.to_vec(), v.clone()).is_some() {
            return Err(field_err(locus, format!("key {k:?} listed twice")));
        }
    }
    Ok(f)
}

fn skew_body(s: &SkewBicategory) -> SkewBody {
    let mut objects = s.objects.elements().to_vec();
    objects.sort();
    let homs = s
        .homs
        .iter()
        .map(|((x, y), c)| SkewHomDoc {
            src: x.clone(),
            tgt: y.clone(),
            category: category_body(c),
        })
        .collect();
    let composition = s
        .comp
        .iter()
        .map(|((x, y, z), f)| SkewCompDoc {
            src: x.clone(),
            mid: y.clone(),
            tgt: z.clone(),
            functor: functor_doc(f),
        })
        .collect();
    SkewBody {
        objects,
        homs,
        composition,
        units: s.units.clone(),
        assoc: family_rows(&s.assoc),
        left_unitor: family_rows(&s.left_unitor),
        right_unitor: family_rows(&s.right_unitor),
    }
}

fn skew_from_body(b: SkewBody, locus: &str) -> Result<SkewBicategory> {
    let obs = objects_set(&b.objects, &format!("{locus}objects"))?;
    let mut homs = BTreeMap::new();
    for h in &b.homs {
        let l = format!("{locus}homs ({},{})", h.src, h.tgt);
        if !obs.contains(&h.src) || !obs.contains(&h.tgt) {
            return Err(field_err(&l, "unknown object"));
        }
        let c = category_from_body(&h.category, true, &format!("{l}."))?;
        if homs.insert((h.src.clone(), h.tgt.clone()), c).is_some() {
            return Err(field_err(&l, "hom listed twice"));
        }
    }
    for x in &obs {
        for y in &obs {
            if !homs.contains_key(&(x.clone(), y.clone())) {
                return Err(field_err(
                    &format!("{locus}homs"),
                    format!("missing hom-category ({x},{y})"),
                ));
            }
        }
    }
    let hom = |x: &str, y: &str| &homs[&(x.to_string(), y.to_string())];
    let mut comp = BTreeMap::new();
    for c in &b.composition {
        let l = format!("{locus}composition ({},{},{})", c.src, c.mid, c.tgt);
        if ![&c.src, &c.mid, &c.tgt].iter().all(|o| obs.contains(o)) {
            return Err(field_err(&l, "unknown object"));
        }
        let dom = product(hom(&c.mid, &c.tgt), hom(&c.src, &c.mid));
        let f = functor_from_doc(&dom, hom(&c.src, &c.tgt), &c.functor, &l)?;
        comp.insert((c.src.clone(), c.mid.clone(), c.tgt.clone()), f);
    }
    Ok(SkewBicategory {
        objects: obs,
        homs: homs.clone(),
        comp,
        units: b.units,
        assoc: family_from_rows(&b.assoc, 7, &format!("{locus}assoc"))?,
        left_unitor: family_from_rows(&b.left_unitor, 3, &format!("{locus}left_unitor"))?,
        right_unitor: family_from_rows(&b.right_unitor, 3, &format!("{locus}right_unitor"))?,
    })
}

fn skew_warping_body(w: &SkewWarping) -> SkewWarpingBody {
    SkewWarpingBody {
        base: skew_body(&w.base),
        obj_map: w.obj_map.pairs().map(|(a, b)| (a.clone(), b.clone())).collect(),
        ext: w
            .ext
            .iter()
            .map(|((x, y), f)| ExtDoc {
                src: x.clone(),
                tgt: y.clone(),
                functor: functor_doc(f),
            })
            .collect(),
        k: w.k.clone(),
        nu: family_rows(&w.nu),
        nu0: family_rows(&w.nu0),
        kappa: family_rows(&w.kappa),
    }
}

fn skew_warping_from_body(b: SkewWarpingBody, locus: &str) -> Result<SkewWarping> {
    let base = skew_from_body(b.base, &format!("{locus}base."))?;
    let obs = base.objects.clone();
    let t = function_from_map(&obs, &obs, &b.obj_map, &format!("{locus}obj_map"))?;
    let mut ext = BTreeMap::new();
    for e in &b.ext {
        let l = format!("{locus}ext ({},{})", e.src, e.tgt);
        if !obs.contains(&e.src) || !obs.contains(&e.tgt) {
            return Err(field_err(&l, "unknown object"));
        }
        let ty = t.apply(&e.tgt);
        let f = functor_from_doc(base.hom(&e.src, ty), base.hom(t.apply(&e.src), ty), &e.functor, &l)?;
        if ext.insert((e.src.clone(), e.tgt.clone()), f).is_some() {
            return Err(field_err(&l, "listed twice"));
        }
    }
    Ok(SkewWarping {
        obj_map: t,
        ext,
        k: b.k,
        nu: family_from_rows(&b.nu, 5, &format!("{locus}nu"))?,
        nu0: family_from_rows(&b.nu0, 1, &format!("{locus}nu0"))?,
        kappa: family_from_rows(&b.kappa, 3, &format!("{locus}kappa"))?,
        base,
    })
}

// ---- structures to documents and back ----

fn to_value<T: Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn monad_file(m: &MonadTable) -> MonadFile {
    let b = category_body(&m.table);
    MonadFile {
        kind: "monad".into(),
        objects: b.objects,
        homs: b.homs,
        identities: b.identities,
        composition: b.composition,
        over: m.over.as_ref().map(|(base, endo)| OverDoc {
            base: category_body(&monad_to_category(base)),
            endo: span_docs(endo),
        }),
    }
}

/// The document of a structure, as a JSON value.
pub fn to_document(s: &Structure) -> Value {
    match s {
        Structure::Category(c) => {
            let b = category_body(c);
            to_value(&CategoryFile {
                kind: "category".into(),
                objects: b.objects,
                homs: b.homs,
                identities: b.identities,
                composition: b.composition,
            })
        }
        Structure::Monad(m) => to_value(&monad_file(m)),
        Structure::Warping(w) => to_value(&WarpingFile {
            kind: "warping".into(),
            base: category_body(&monad_to_category(&w.base)),
            endo: span_docs(&w.endo),
            t: cell_rows(&w.t),
            k: cell_rows(&w.k),
        }),
        Structure::Wreath(w) => to_value(&WreathFile {
            kind: "wreath".into(),
            base: category_body(&monad_to_category(&w.base)),
            endo: span_docs(&w.endo),
            d: cell_rows(&w.d),
            q: cell_rows(&w.q),
            j: cell_rows(&w.j),
        }),
        Structure::MwMonad(m) => {
            let b = mw_body(m);
            to_value(&MwFile {
                kind: "mw_monad".into(),
                base: b.base,
                obj_map: b.obj_map,
                ext: b.ext,
                unit: b.unit,
            })
        }
        Structure::Algebra(e) => {
            let mut action = Vec::new();
            for (z, f) in &e.e_maps {
                for (g, h) in f.pairs() {
                    action.push([z.clone(), g.clone(), h.clone()]);
                }
            }
            to_value(&AlgebraFile {
                kind: "algebra".into(),
                monad: mw_body(&e.base),
                object: e.object.clone(),
                action: sorted_rows(action),
            })
        }
        Structure::SkewBicategory(s) => {
            let b = skew_body(s);
            to_value(&SkewFile {
                kind: "skew_bicategory".into(),
                objects: b.objects,
                homs: b.homs,
                composition: b.composition,
                units: b.units,
                assoc: b.assoc,
                left_unitor: b.left_unitor,
                right_unitor: b.right_unitor,
            })
        }
        Structure::SkewWarping(w) => {
            let b = skew_warping_body(w);
            to_value(&SkewWarpingFile {
                kind: "skew_warping".into(),
                base: b.base,
                obj_map: b.obj_map,
                ext: b.ext,
                k: b.k,
                nu: b.nu,
                nu0: b.nu0,
                kappa: b.kappa,
            })
        }
        Structure::SkewAlgebra(a) => {
            let e = a
                .e_funcs
                .iter()
                .map(|(z, f)| EDoc {
                    object: z.clone(),
                    functor: functor_doc(f),
                })
                .collect();
            to_value(&SkewAlgebraFile {
                kind: "skew_algebra".into(),
                warping: skew_warping_body(&a.warping),
                object: a.object.clone(),
                e,
                nu: family_rows(&a.cell_nu),
                kappa: family_rows(&a.cell_kappa),
            })
        }
    }
}

/// Canonical text of a structure.
pub fn emit(s: &Structure) -> String {
    to_canonical(&to_document(s))
}

fn typed<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(json_err)
}

fn warping_frames(base: &SpanMonad, endo: &Span) -> Result<(Span, Span, Span)> {
    let ab = compose_spans(endo, base.carrier())?;
    let aba = compose_spans(&ab, endo)?;
    Ok((ab, aba, identity_span(base.objects())))
}

/// Parses a structure file. Law violations are left to the validators,
/// except that the base monad of a warping, wreath or monad-on-`AB` must be
/// lawful.
pub fn parse(text: &str) -> Result<Structure> {
    let v: Value = serde_json::from_str(text).map_err(json_err)?;
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| field_err("kind", "missing or not a string"))?;
    match kind {
        "category" => {
            let f: CategoryFile = typed(text)?;
            let c = category_of(&f.objects, &f.homs, &f.identities, &f.composition, true, "")?;
            Ok(Structure::Category(c))
        }
        "monad" => {
            let f: MonadFile = typed(text)?;
            let table = category_of(&f.objects, &f.homs, &f.identities, &f.composition, false, "")?;
            let over = match &f.over {
                None => None,
                Some(o) => {
                    let base = base_monad(&o.base, "over.base.")?;
                    let endo = span_from_docs(base.objects(), &o.endo, "over.endo")?;
                    Some((base, endo))
                }
            };
            Ok(Structure::Monad(MonadTable { table, over }))
        }
        "warping" => {
            let f: WarpingFile = typed(text)?;
            let base = base_monad(&f.base, "base.")?;
            let endo = span_from_docs(base.objects(), &f.endo, "endo")?;
            let (ab, aba, one) = warping_frames(&base, &endo)?;
            let t = cell_from_rows(aba, ab.clone(), &f.t, "t")?;
            let k = cell_from_rows(one, ab, &f.k, "k")?;
            Ok(Structure::Warping(Warping { base, endo, t, k }))
        }
        "wreath" => {
            let f: WreathFile = typed(text)?;
            let base = base_monad(&f.base, "base.")?;
            let endo = span_from_docs(base.objects(), &f.endo, "endo")?;
            let (ab, _, one) = warping_frames(&base, &endo)?;
            let ba = compose_spans(base.carrier(), &endo)?;
            let aa = compose_spans(&endo, &endo)?;
            let d = cell_from_rows(ba, ab.clone(), &f.d, "d")?;
            let q = cell_from_rows(aa, ab.clone(), &f.q, "q")?;
            let j = cell_from_rows(one, ab, &f.j, "j")?;
            Ok(Structure::Wreath(Wreath { base, endo, d, q, j }))
        }
        "mw_monad" => {
            let f: MwFile = typed(text)?;
            let body = MwBody {
                base: f.base,
                obj_map: f.obj_map,
                ext: f.ext,
                unit: f.unit,
            };
            Ok(Structure::MwMonad(mw_from_body(body, "")?))
        }
        "algebra" => {
            let f: AlgebraFile = typed(text)?;
            let m = mw_from_body(f.monad, "monad.")?;
            if !m.base.objects().contains(&f.object) {
                return Err(field_err("object", format!("unknown object {}", f.object)));
            }
            let mut rows: BTreeMap<Atom, BTreeMap<Atom, Atom>> = BTreeMap::new();
            for [z, g, h] in f.action {
                if rows.entry(z.clone()).or_default().insert(g.clone(), h).is_some() {
                    return Err(field_err("action", format!("{g} at {z} listed twice")));
                }
            }
            let a = f.object;
            let mut e_maps = BTreeMap::new();
            for z in m.base.objects() {
                let map = rows.remove(z).unwrap_or_default();
                let l = format!("action at {z}");
                let fz = function_from_map(m.base.hom(z, &a), m.base.hom(m.t(z), &a), &map, &l)?;
                e_maps.insert(z.clone(), fz);
            }
            if let Some((z, _)) = rows.into_iter().next() {
                return Err(field_err("action", format!("unknown object {z}")));
            }
            Ok(Structure::Algebra(EFamily {
                base: m,
                object: a,
                e_maps,
            }))
        }
        "skew_bicategory" => {
            let f: SkewFile = typed(text)?;
            let body = SkewBody {
                objects: f.objects,
                homs: f.homs,
                composition: f.composition,
                units: f.units,
                assoc: f.assoc,
                left_unitor: f.left_unitor,
                right_unitor: f.right_unitor,
            };
            Ok(Structure::SkewBicategory(skew_from_body(body, "")?))
        }
        "skew_warping" => {
            let f: SkewWarpingFile = typed(text)?;
            let body = SkewWarpingBody {
                base: f.base,
                obj_map: f.obj_map,
                ext: f.ext,
                k: f.k,
                nu: f.nu,
                nu0: f.nu0,
                kappa: f.kappa,
            };
            Ok(Structure::SkewWarping(skew_warping_from_body(body, "")?))
        }
        "skew_algebra" => {
            let f: SkewAlgebraFile = typed(text)?;
            let warping = skew_warping_from_body(f.warping, "warping.")?;
            let a = f.object;
            if !warping.base.objects.contains(&a) {
                return Err(field_err("object", format!("unknown object {a}")));
            }
            let mut e_funcs = BTreeMap::new();
            for e in &f.e {
                let l = format!("e at {}", e.object);
                if !warping.base.objects.contains(&e.object) {
                    return Err(field_err(&l, "unknown object"));
                }
                let dom = warping.base.hom(&e.object, &a);
                let cod = warping.base.hom(warping.t(&e.object), &a);
                let func = functor_from_doc(dom, cod, &e.functor, &l)?;
                if e_funcs.insert(e.object.clone(), func).is_some() {
                    return Err(field_err(&l, "listed twice"));
                }
            }
            Ok(Structure::SkewAlgebra(SkewAlgebra {
                warping,
                object: a,
                e_funcs,
                cell_nu: family_from_rows(&f.nu, 4, "nu")?,
                cell_kappa: family_from_rows(&f.kappa, 2, "kappa")?,
            }))
        }
        other => Err(field_err(
            "kind",
            format!("unknown kind {other:?}; expected one of {}", KINDS.join(", ")),
        )),
    }
}

// ---- monad tables ----

impl MonadTable {
    /// The table of a monad on `AB`; the factorisation is dropped when it
    /// is the trivial one (`A = 1` and the monad is the base itself).
    pub fn of_monad_on_ab(m: &MonadOnAB) -> Result<Self> {
        let table = monad_to_category(&m.as_span_monad()?);
        let trivial = *m.endo() == identity_span(m.base().objects()) && table == monad_to_category(m.base());
        Ok(MonadTable {
            table,
            over: (!trivial).then(|| (m.base().clone(), m.endo().clone())),
        })
    }

    /// The monad on `AB` this table describes; a table without `over` is a
    /// monad over itself.
    pub fn to_monad_on_ab(&self) -> Result<MonadOnAB> {
        let (_, mult, unit) = monad_cells(&self.table)?;
        match &self.over {
            Some((base, endo)) => MonadOnAB::new(base, endo, mult, unit),
            None => {
                let base = span_monad_of(&self.table)?;
                let endo = identity_span(base.objects());
                MonadOnAB::new(&base, &endo, mult, unit)
            }
        }
    }

    /// Monad laws, plus the base-embedding condition when `over` is present.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new("monad");
        let cells = match monad_cells(&self.table) {
            Ok(c) => c,
            Err(e) => {
                r.structural(e.to_string());
                return r;
            }
        };
        let (carrier, mult, unit) = cells;
        let laws = validate_span_monad(&carrier, &mult, &unit);
        r.structural.extend(laws.structural);
        r.violations.extend(laws.violations);
        if let (Some((base, endo)), true) = (&self.over, r.is_valid()) {
            match MonadOnAB::new(base, endo, mult, unit) {
                Ok(m) => r.absorb("over", crate::correspond::validate_side_condition(&m)),
                Err(e) => r.structural(e.to_string()),
            }
        }
        r
    }
}
