//! JSON reading and writing for categories, functors, natural
//! transformations, cones and preorders.
//!
//! Ids are strings. A category may be given inline, as a path to a JSON file
//! (relative to a workspace directory), or as a builtin name such as `two`,
//! `delta3op`, `chain:4` or `delta:2`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::fincat::{
    self, chain_category, cospan, delta_truncated, discrete, opposite, parallel_pair, span, split_idempotent, terminal,
    two, CategoryError, FinCategory, FinFunctor, Morphism,
};
use crate::limits::{Cocone, Cone};
use crate::setval::{FinSet, FunctorError, NatTrans, NatTransError, SetFunctor};
use crate::sketch::{delta3op, Preorder, SketchError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed input at `{pointer}`: {message}")]
    Malformed { pointer: String, message: String },
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("unknown builtin category `{0}`")]
    UnknownBuiltin(String),
    #[error("invalid category: {0}")]
    Category(#[from] CategoryError),
    #[error("invalid functor: {0}")]
    Functor(#[from] FunctorError),
    #[error("invalid functor between categories: {0}")]
    FinFunctor(#[from] fincat::FunctorError),
    #[error("invalid natural transformation: {0}")]
    NatTrans(#[from] NatTransError),
    #[error("invalid preorder: {0}")]
    Preorder(#[from] SketchError),
}

impl JsonError {
    /// Whether the input parsed but failed a mathematical validator.
    pub fn is_validation(&self) -> bool {
        !matches!(self, JsonError::Malformed { .. } | JsonError::Io { .. } | JsonError::UnknownBuiltin(_))
    }
}

fn malformed(pointer: &str, message: impl Into<String>) -> JsonError {
    JsonError::Malformed { pointer: if pointer.is_empty() { "/".into() } else { pointer.into() }, message: message.into() }
}

fn child(pointer: &str, key: &str) -> String {
    format!("{pointer}/{}", key.replace('~', "~0").replace('/', "~1"))
}

fn field<'a>(v: &'a Value, key: &str, pointer: &str) -> Result<&'a Value, JsonError> {
    v.get(key).ok_or_else(|| malformed(pointer, format!("missing field `{key}`")))
}

fn object<'a>(v: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>, JsonError> {
    v.as_object().ok_or_else(|| malformed(pointer, "expected an object"))
}

fn array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array().ok_or_else(|| malformed(pointer, "expected an array"))
}

fn id(v: &Value, pointer: &str) -> Result<String, JsonError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(malformed(pointer, "expected a string id")),
    }
}

fn index(v: &Value, pointer: &str) -> Result<usize, JsonError> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| malformed(pointer, "expected a nonnegative integer"))
}

fn indices(v: &Value, pointer: &str) -> Result<Vec<usize>, JsonError> {
    array(v, pointer)?.iter().enumerate().map(|(i, x)| index(x, &child(pointer, &i.to_string()))).collect()
}

/// A builtin category by name.
pub fn builtin(name: &str) -> Result<FinCategory, JsonError> {
    let unknown = || JsonError::UnknownBuiltin(name.to_string());
    let arg = |prefix: &str| name.strip_prefix(prefix).map(|n| n.parse::<usize>().map_err(|_| unknown()));
    if let Some(k) = arg("chain:") {
        return Ok(chain_category(k?)?);
    }
    if let Some(n) = arg("discrete:") {
        return Ok(discrete(n?));
    }
    if let Some(n) = arg("delta_op:") {
        return Ok(opposite(&delta_truncated(n?)));
    }
    if let Some(n) = arg("delta:") {
        return Ok(delta_truncated(n?));
    }
    Ok(match name {
        "terminal" | "1" => terminal(),
        "two" | "2" => two(),
        "parallel_pair" => parallel_pair(),
        "cospan" => cospan(),
        "span" => span(),
        "split_idempotent" => split_idempotent(),
        "delta3op" => (*delta3op()).clone(),
        _ => return Err(unknown()),
    })
}

/// Resolves category references and files, caching categories so that
/// functors loaded against the same reference share one shape.
pub struct Loader {
    workspace: PathBuf,
    categories: HashMap<String, Arc<FinCategory>>,
}

impl Loader {
    pub fn new(workspace: impl Into<PathBuf>) -> Self {
        Loader { workspace: workspace.into(), categories: HashMap::new() }
    }

    pub fn workspace(&self) -> &Path {
        &self.workspace
    }

    /// Reads and parses a JSON file below the workspace.
    pub fn read(&self, path: &str) -> Result<Value, JsonError> {
        let full = self.workspace.join(path);
        let text = std::fs::read_to_string(&full)
            .map_err(|e| JsonError::Io { path: full.display().to_string(), message: e.to_string() })?;
        serde_json::from_str(&text).map_err(|e| malformed("", format!("{}: {e}", full.display())))
    }

    /// A category reference: inline object, builtin name or file path.
    pub fn category(&mut self, v: &Value, pointer: &str) -> Result<Arc<FinCategory>, JsonError> {
        match v {
            Value::String(name) => {
                if let Some(c) = self.categories.get(name) {
                    return Ok(c.clone());
                }
                let c = if name == "delta3op" {
                    delta3op()
                } else {
                    match builtin(name) {
                        Ok(c) => Arc::new(c),
                        Err(JsonError::UnknownBuiltin(_)) if name.ends_with(".json") => {
                            let doc = self.read(name)?;
                            self.category(&doc, "")?
                        }
                        Err(e) => return Err(e),
                    }
                };
                self.categories.insert(name.clone(), c.clone());
                Ok(c)
            }
            Value::Object(_) => Ok(Arc::new(parse_category(v, pointer)?)),
            _ => Err(malformed(pointer, "expected a category object, builtin name or path")),
        }
    }

    /// A document that is either a value of the requested kind or a path to
    /// one.
    fn deref(&self, v: &Value) -> Result<Value, JsonError> {
        match v {
            Value::String(path) => self.read(path),
            other => Ok(other.clone()),
        }
    }

    pub fn functor(&mut self, v: &Value, pointer: &str) -> Result<SetFunctor, JsonError> {
        let doc = self.deref(v)?;
        let pointer = if v.is_string() { "" } else { pointer };
        let shape = self.category(field(&doc, "shape", pointer)?, &child(pointer, "shape"))?;
        parse_functor(&shape, &doc, pointer)
    }

    /// A natural transformation with inline or referenced `source` and
    /// `target`.
    pub fn nat_trans(&mut self, v: &Value, pointer: &str) -> Result<NatTrans, JsonError> {
        let doc = self.deref(v)?;
        let pointer = if v.is_string() { "" } else { pointer };
        let source = self.functor(field(&doc, "source", pointer)?, &child(pointer, "source"))?;
        let target = self.functor(field(&doc, "target", pointer)?, &child(pointer, "target"))?;
        let target = align_shape(target, &source);
        parse_components(source, target, &doc, pointer)
    }

    pub fn fin_functor(&mut self, v: &Value, pointer: &str) -> Result<FinFunctor, JsonError> {
        let doc = self.deref(v)?;
        let pointer = if v.is_string() { "" } else { pointer };
        let source = self.category(field(&doc, "source", pointer)?, &child(pointer, "source"))?;
        let target = self.category(field(&doc, "target", pointer)?, &child(pointer, "target"))?;
        let lookup = |map: &Value, key: &str, count: usize, name: &dyn Fn(usize) -> String, find: &dyn Fn(&str) -> Option<usize>| {
            let ptr = child(pointer, key);
            let map = object(map, &ptr)?;
            (0..count)
                .map(|i| {
                    let k = name(i);
                    let p = child(&ptr, &k);
                    let v = map.get(&k).ok_or_else(|| malformed(&ptr, format!("no image given for `{k}`")))?;
                    let target_id = id(v, &p)?;
                    find(&target_id).ok_or_else(|| malformed(&p, format!("unknown id `{target_id}`")))
                })
                .collect::<Result<Vec<usize>, JsonError>>()
        };
        let objects = lookup(
            field(&doc, "objects", pointer)?,
            "objects",
            source.object_count(),
            &|i| source.object_name(i).to_string(),
            &|s| target.object_index(s),
        )?;
        let morphisms = lookup(
            field(&doc, "morphisms", pointer)?,
            "morphisms",
            source.morphism_count(),
            &|i| source.morphism_name(i).to_string(),
            &|s| target.morphism_index(s),
        )?;
        Ok(FinFunctor::new(source, target, objects, morphisms)?)
    }

    pub fn preorder(&mut self, v: &Value, pointer: &str) -> Result<Preorder, JsonError> {
        let doc = self.deref(v)?;
        parse_preorder(&doc, if v.is_string() { "" } else { pointer })
    }
}

/// Shares `source`'s shape pointer with `target` when the shapes are equal.
fn align_shape(target: SetFunctor, source: &SetFunctor) -> SetFunctor {
    if Arc::ptr_eq(target.shape(), source.shape()) || target.shape() != source.shape() {
        return target;
    }
    SetFunctor::new(source.shape().clone(), target.sets().to_vec(), target.maps().to_vec()).expect("same data")
}

pub fn parse_category(v: &Value, pointer: &str) -> Result<FinCategory, JsonError> {
    let objects: Vec<String> = array(field(v, "objects", pointer)?, &child(pointer, "objects"))?
        .iter()
        .enumerate()
        .map(|(i, o)| id(o, &child(&child(pointer, "objects"), &i.to_string())))
        .collect::<Result<_, _>>()?;
    let object_index: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    let mptr = child(pointer, "morphisms");
    let mut morphisms = Vec::new();
    for (i, m) in array(field(v, "morphisms", pointer)?, &mptr)?.iter().enumerate() {
        let p = child(&mptr, &i.to_string());
        let name = id(field(m, "id", &p)?, &child(&p, "id"))?;
        let end = |key: &str| -> Result<usize, JsonError> {
            let o = id(field(m, key, &p)?, &child(&p, key))?;
            object_index
                .get(o.as_str())
                .copied()
                .ok_or(JsonError::Category(CategoryError::DanglingDomain { morphism: name.clone(), object: o }))
        };
        let dom = end("dom")?;
        let cod = end("cod")?;
        morphisms.push(Morphism { name, dom, cod });
    }
    let morphism_index: HashMap<String, usize> = morphisms.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
    let find = |name: &str| -> Result<usize, JsonError> {
        morphism_index.get(name).copied().ok_or_else(|| JsonError::Category(CategoryError::UnknownId(name.to_string())))
    };
    let iptr = child(pointer, "identities");
    let ids = object(field(v, "identities", pointer)?, &iptr)?;
    let mut identities = Vec::with_capacity(objects.len());
    for o in &objects {
        match ids.get(o) {
            Some(m) => identities.push(find(&id(m, &child(&iptr, o))?)?),
            None => return Err(CategoryError::MissingIdentity(o.clone()).into()),
        }
    }
    let cptr = child(pointer, "compose");
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, entry) in array(field(v, "compose", pointer)?, &cptr)?.iter().enumerate() {
        let p = child(&cptr, &i.to_string());
        let triple = array(entry, &p)?;
        if triple.len() != 3 {
            return Err(malformed(&p, "expected [g, f, g∘f]"));
        }
        let g = find(&id(&triple[0], &child(&p, "0"))?)?;
        let f = find(&id(&triple[1], &child(&p, "1"))?)?;
        let gf = find(&id(&triple[2], &child(&p, "2"))?)?;
        if morphisms[f].cod != morphisms[g].dom {
            return Err(CategoryError::NotComposable { g: morphisms[g].name.clone(), f: morphisms[f].name.clone() }.into());
        }
        if let Some(prev) = table.insert((g, f), gf) {
            if prev != gf {
                return Err(
                    CategoryError::ConflictingComposite { g: morphisms[g].name.clone(), f: morphisms[f].name.clone() }.into()
                );
            }
        }
    }
    Ok(FinCategory::new(objects, morphisms, identities, |g, f| table.get(&(g, f)).copied())?)
}

pub fn category_to_json(c: &FinCategory) -> Value {
    let morphisms: Vec<Value> = c
        .morphisms()
        .iter()
        .map(|m| json!({"id": m.name, "dom": c.object_name(m.dom), "cod": c.object_name(m.cod)}))
        .collect();
    let identities: Map<String, Value> =
        (0..c.object_count()).map(|o| (c.object_name(o).to_string(), json!(c.morphism_name(c.identity(o))))).collect();
    let compose: Vec<Value> = c
        .composable_pairs()
        .map(|(g, f)| json!([c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))]))
        .collect();
    json!({"objects": c.objects(), "morphisms": morphisms, "identities": identities, "compose": compose})
}

fn labels(v: &Value, pointer: &str) -> Result<FinSet, JsonError> {
    let items = array(v, pointer)?;
    let labels: Vec<String> =
        items.iter().enumerate().map(|(i, x)| id(x, &child(pointer, &i.to_string()))).collect::<Result<_, _>>()?;
    let mut sorted = labels.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != labels.len() {
        return Err(malformed(pointer, "labels repeat"));
    }
    Ok(FinSet::labelled(labels))
}

fn per_object<T>(
    shape: &FinCategory,
    v: &Value,
    pointer: &str,
    parse: impl Fn(&Value, &str) -> Result<T, JsonError>,
) -> Result<Vec<T>, JsonError> {
    let map = object(v, pointer)?;
    (0..shape.object_count())
        .map(|o| {
            let name = shape.object_name(o);
            let value = map.get(name).ok_or_else(|| malformed(pointer, format!("missing entry for object `{name}`")))?;
            parse(value, &child(pointer, name))
        })
        .collect()
}

/// Parses `{"sets", "maps"}` against a known shape. Identity maps may be
/// omitted.
pub fn parse_functor(shape: &Arc<FinCategory>, v: &Value, pointer: &str) -> Result<SetFunctor, JsonError> {
    let sets = per_object(shape, field(v, "sets", pointer)?, &child(pointer, "sets"), labels)?;
    let mptr = child(pointer, "maps");
    let maps_json = object(field(v, "maps", pointer)?, &mptr)?;
    let mut maps = Vec::with_capacity(shape.morphism_count());
    for f in 0..shape.morphism_count() {
        let name = shape.morphism_name(f);
        match maps_json.get(name) {
            Some(m) => maps.push(indices(m, &child(&mptr, name))?),
            None if shape.is_identity(f) => maps.push((0..sets[shape.dom(f)].size()).collect()),
            None => return Err(malformed(&mptr, format!("missing map for morphism `{name}`"))),
        }
    }
    Ok(SetFunctor::new(shape.clone(), sets, maps)?)
}

/// `{"shape", "sets", "maps"}` with the given shape reference.
pub fn functor_to_json(f: &SetFunctor, shape_ref: Value) -> Value {
    let shape = f.shape();
    let sets: Map<String, Value> = (0..shape.object_count())
        .map(|o| {
            let labels: Vec<String> = (0..f.size(o)).map(|x| f.set(o).label(x)).collect();
            (shape.object_name(o).to_string(), json!(labels))
        })
        .collect();
    let maps: Map<String, Value> =
        (0..shape.morphism_count()).map(|m| (shape.morphism_name(m).to_string(), json!(f.map(m)))).collect();
    json!({"shape": shape_ref, "sets": sets, "maps": maps})
}

fn parse_components(source: SetFunctor, target: SetFunctor, v: &Value, pointer: &str) -> Result<NatTrans, JsonError> {
    let components = per_object(source.shape(), field(v, "components", pointer)?, &child(pointer, "components"), indices)?;
    Ok(NatTrans::new(source, target, components)?)
}

/// Components only.
pub fn components_to_json(t: &NatTrans) -> Value {
    let shape = t.shape();
    let components: Map<String, Value> =
        (0..shape.object_count()).map(|o| (shape.object_name(o).to_string(), json!(t.component(o)))).collect();
    json!({ "components": components })
}

/// `{"source", "target", "components"}` with both functors inline.
pub fn nat_trans_to_json(t: &NatTrans, shape_ref: &Value) -> Value {
    let mut v = components_to_json(t);
    v["source"] = functor_to_json(t.source(), shape_ref.clone());
    v["target"] = functor_to_json(t.target(), shape_ref.clone());
    v
}

pub fn cone_to_json(c: &Cone, shape: &FinCategory) -> Value {
    let apex: Vec<String> = (0..c.apex.size()).map(|x| c.apex.label(x)).collect();
    let legs: Map<String, Value> =
        (0..shape.object_count()).map(|o| (shape.object_name(o).to_string(), json!(c.legs[o]))).collect();
    json!({"apex": apex, "legs": legs})
}

pub fn cocone_to_json(c: &Cocone, shape: &FinCategory) -> Value {
    let nadir: Vec<String> = (0..c.nadir.size()).map(|x| c.nadir.label(x)).collect();
    let legs: Map<String, Value> =
        (0..shape.object_count()).map(|o| (shape.object_name(o).to_string(), json!(c.legs[o]))).collect();
    json!({"apex": nadir, "legs": legs})
}

/// Parses a cone over `d`, checking the cone condition.
pub fn parse_cone(d: &SetFunctor, v: &Value, pointer: &str) -> Result<Cone, JsonError> {
    let apex = labels(field(v, "apex", pointer)?, &child(pointer, "apex"))?;
    let legs = per_object(d.shape(), field(v, "legs", pointer)?, &child(pointer, "legs"), indices)?;
    let cone = Cone { apex, legs };
    cone.check(d).map_err(|e| malformed(pointer, e.to_string()))?;
    Ok(cone)
}

/// Reflexive pairs may be omitted; transitivity is checked.
pub fn parse_preorder(v: &Value, pointer: &str) -> Result<Preorder, JsonError> {
    let eptr = child(pointer, "elements");
    let elements: Vec<String> = array(field(v, "elements", pointer)?, &eptr)?
        .iter()
        .enumerate()
        .map(|(i, x)| id(x, &child(&eptr, &i.to_string())))
        .collect::<Result<_, _>>()?;
    let position = |name: &str, p: &str| {
        elements.iter().position(|e| e == name).ok_or_else(|| malformed(p, format!("unknown element `{name}`")))
    };
    let lptr = child(pointer, "leq");
    let mut pairs: Vec<(usize, usize)> = (0..elements.len()).map(|i| (i, i)).collect();
    for (i, pair) in array(field(v, "leq", pointer)?, &lptr)?.iter().enumerate() {
        let p = child(&lptr, &i.to_string());
        let ab = array(pair, &p)?;
        if ab.len() != 2 {
            return Err(malformed(&p, "expected [a, b]"));
        }
        let a = position(&id(&ab[0], &p)?, &p)?;
        let b = position(&id(&ab[1], &p)?, &p)?;
        pairs.push((a, b));
    }
    Ok(Preorder::new(elements.clone(), &pairs)?)
}

pub fn preorder_to_json(p: &Preorder) -> Value {
    let leq: Vec<Value> = p.pairs().into_iter().map(|(a, b)| json!([p.elements[a], p.elements[b]])).collect();
    json!({"elements": p.elements, "leq": leq})
}

pub fn fin_functor_to_json(k: &FinFunctor, source_ref: Value, target_ref: Value) -> Value {
    let (s, t) = (k.source(), k.target());
    let objects: Map<String, Value> =
        (0..s.object_count()).map(|o| (s.object_name(o).to_string(), json!(t.object_name(k.on_object(o))))).collect();
    let morphisms: Map<String, Value> = (0..s.morphism_count())
        .map(|m| (s.morphism_name(m).to_string(), json!(t.morphism_name(k.on_morphism(m)))))
        .collect();
    json!({"source": source_ref, "target": target_ref, "objects": objects, "morphisms": morphisms})
}
