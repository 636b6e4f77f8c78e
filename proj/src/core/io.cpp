#include "ngpd/io.hpp"

#include <json.hpp>
#include <map>
#include <unordered_map>

namespace ngpd {

// Sorted keys: lookups stay logarithmic on large cell maps and output is canonical.
using Json = nlohmann::json;

namespace {

constexpr const char* kKinds[] = {"sset", "multisset", "groupoid", "functor", "ngroupoid", "nfunctor"};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, 0, 0, path);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::unordered_map<std::string, int> index_names(const std::vector<std::string>& names, const std::string& path) {
  std::unordered_map<std::string, int> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], static_cast<int>(i)).second) fail(path, "duplicate name '" + names[i] + "'");
  return out;
}

int lookup(const std::unordered_map<std::string, int>& idx, const std::string& name, const std::string& path) {
  auto it = idx.find(name);
  if (it == idx.end()) fail(path, "unknown name '" + name + "'");
  return it->second;
}

// Object map {source name: target name}, total on the source names.
CellMap read_cell_map(const Json& j, const std::vector<std::string>& from,
                      const std::unordered_map<std::string, int>& from_idx,
                      const std::unordered_map<std::string, int>& to_idx, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  CellMap out(from.size(), -1);
  for (const auto& [k, v] : j.items()) {
    const int src = lookup(from_idx, k, path);
    if (out[src] >= 0) fail(path, "repeated key '" + k + "'");
    out[src] = lookup(to_idx, as_string(v, path + "/" + k), path + "/" + k);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < 0) fail(path, "no image for '" + from[i] + "'");
  return out;
}

Json write_cell_map(const CellMap& m, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  Json j = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) j[from[i]] = to[m[i]];
  return j;
}

std::string map_key(char kind, int axis, int i) {
  return std::string(1, kind) + ":" + std::to_string(axis) + ":" + std::to_string(i);
}

// --- MultiSSet -------------------------------------------------------------

Json write_multisset(const MultiSSet& x) {
  Json j;
  j["dim_bounds"] = x.dim_bounds();
  Json levels = Json::array();
  for (std::size_t f = 0; f < x.level_count(); ++f) {
    const MultiIndex at = x.multi_index(f);
    const auto& lvl = x.level_at(f);
    Json l;
    l["index"] = at;
    l["cells"] = lvl.names;
    Json maps = Json::object();
    for (int a = 0; a < x.arity(); ++a) {
      if (at[a] >= 1) {
        MultiIndex down = at;
        --down[a];
        for (std::size_t i = 0; i < lvl.face[a].size(); ++i)
          maps[map_key('d', a, static_cast<int>(i))] = write_cell_map(lvl.face[a][i], lvl.names, x.level(down).names);
      }
      if (at[a] < x.dim_bound(a)) {
        MultiIndex up = at;
        ++up[a];
        for (std::size_t i = 0; i < lvl.degen[a].size(); ++i)
          maps[map_key('s', a, static_cast<int>(i))] = write_cell_map(lvl.degen[a][i], lvl.names, x.level(up).names);
      }
    }
    l["maps"] = std::move(maps);
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  return j;
}

MultiSSet read_multisset(const Json& j, const std::string& path) {
  const Json& jb = member(j, "dim_bounds", path);
  if (!jb.is_array() || jb.empty()) fail(path + "/dim_bounds", "expected a nonempty array");
  std::vector<int> bounds;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    bounds.push_back(as_int(jb[i], path + "/dim_bounds/" + std::to_string(i)));
    if (bounds.back() < 0) fail(path + "/dim_bounds", "negative bound");
  }
  const auto indices = all_indices(bounds);
  const Json& jl = member(j, "levels", path);
  if (!jl.is_array()) fail(path + "/levels", "expected an array");
  if (jl.size() != indices.size())
    fail(path + "/levels", "expected " + std::to_string(indices.size()) + " levels, got " + std::to_string(jl.size()));
  const int n = static_cast<int>(bounds.size());
  std::vector<std::vector<std::string>> names(indices.size());
  std::vector<std::unordered_map<std::string, int>> idx(indices.size());
  std::map<MultiIndex, std::size_t> flat;
  for (std::size_t f = 0; f < indices.size(); ++f) {
    const std::string lp = path + "/levels/" + std::to_string(f);
    const Json& ji = member(jl[f], "index", lp);
    std::vector<int> at;
    if (ji.is_array())
      for (std::size_t a = 0; a < ji.size(); ++a) at.push_back(as_int(ji[a], lp + "/index"));
    if (at != indices[f]) fail(lp + "/index", "expected " + index_to_string(indices[f]));
    names[f] = as_strings(member(jl[f], "cells", lp), lp + "/cells");
    idx[f] = index_names(names[f], lp + "/cells");
    flat[indices[f]] = f;
  }
  std::vector<MultiSSet::Level> levels(indices.size());
  for (std::size_t f = 0; f < indices.size(); ++f) {
    const std::string lp = path + "/levels/" + std::to_string(f) + "/maps";
    const MultiIndex& at = indices[f];
    const Json& maps = member(jl[f], "maps", path + "/levels/" + std::to_string(f));
    if (!maps.is_object()) fail(lp, "expected an object");
    auto& lvl = levels[f];
    lvl.names = names[f];
    lvl.face.resize(n);
    lvl.degen.resize(n);
    std::size_t expected_keys = 0;
    for (int a = 0; a < n; ++a) {
      for (int pass = 0; pass < 2; ++pass) {
        const bool is_face = pass == 0;
        if (is_face ? at[a] < 1 : at[a] >= bounds[a]) continue;
        MultiIndex other = at;
        other[a] += is_face ? -1 : 1;
        const std::size_t of = flat.at(other);
        for (int i = 0; i <= at[a]; ++i) {
          const std::string key = map_key(is_face ? 'd' : 's', a, i);
          auto it = maps.find(key);
          if (it == maps.end()) fail(lp, "missing map \"" + key + "\"");
          ++expected_keys;
          (is_face ? lvl.face[a] : lvl.degen[a]).push_back(read_cell_map(*it, names[f], idx[f], idx[of], lp + "/" + key));
        }
      }
    }
    if (maps.size() != expected_keys) {
      for (const auto& [k, v] : maps.items()) {
        (void)v;
        bool known = false;
        for (int a = 0; a < n && !known; ++a)
          for (int i = 0; i <= at[a] && !known; ++i)
            known = (k == map_key('d', a, i) && at[a] >= 1) || (k == map_key('s', a, i) && at[a] < bounds[a]);
        if (!known) fail(lp, "unexpected map \"" + k + "\"");
      }
    }
  }
  try {
    return MultiSSet(bounds, std::move(levels));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

// --- groupoids ---------------------------------------------------------------

Json write_groupoid(const FinGroupoid& g) {
  Json j;
  j["objects"] = g.objects();
  Json mor = Json::array();
  for (const auto& m : g.morphisms())
    mor.push_back(Json{{"name", m.name}, {"source", g.objects()[m.source]}, {"target", g.objects()[m.target]}});
  j["morphisms"] = std::move(mor);
  Json ids = Json::object();
  for (int x = 0; x < g.object_count(); ++x) ids[g.objects()[x]] = g.morphism(g.identity(x)).name;
  j["identities"] = std::move(ids);
  Json inv = Json::object();
  for (int f = 0; f < g.morphism_count(); ++f) inv[g.morphism(f).name] = g.morphism(g.inverse(f)).name;
  j["inverses"] = std::move(inv);
  Json comp = Json::array();
  for (int a = 0; a < g.morphism_count(); ++a)
    for (int b = 0; b < g.morphism_count(); ++b) {
      const int c = g.compose(a, b);
      if (c >= 0) comp.push_back(Json::array({g.morphism(a).name, g.morphism(b).name, g.morphism(c).name}));
    }
  j["composition"] = std::move(comp);
  return j;
}

FinGroupoid read_groupoid(const Json& j, const std::string& path) {
  auto objects = as_strings(member(j, "objects", path), path + "/objects");
  const auto oidx = index_names(objects, path + "/objects");
  const Json& jm = member(j, "morphisms", path);
  if (!jm.is_array()) fail(path + "/morphisms", "expected an array");
  std::vector<FinGroupoid::Morphism> mor;
  std::vector<std::string> mnames;
  for (std::size_t i = 0; i < jm.size(); ++i) {
    const std::string mp = path + "/morphisms/" + std::to_string(i);
    FinGroupoid::Morphism m;
    m.name = as_string(member(jm[i], "name", mp), mp + "/name");
    m.source = lookup(oidx, as_string(member(jm[i], "source", mp), mp + "/source"), mp + "/source");
    m.target = lookup(oidx, as_string(member(jm[i], "target", mp), mp + "/target"), mp + "/target");
    mnames.push_back(m.name);
    mor.push_back(std::move(m));
  }
  const auto midx = index_names(mnames, path + "/morphisms");
  const CellMap ids = read_cell_map(member(j, "identities", path), objects, oidx, midx, path + "/identities");
  const CellMap inv = read_cell_map(member(j, "inverses", path), mnames, midx, midx, path + "/inverses");
  const std::size_t m = mor.size();
  std::vector<int> table(m * m, -1);
  const Json& jc = member(j, "composition", path);
  if (!jc.is_array()) fail(path + "/composition", "expected an array");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string cp = path + "/composition/" + std::to_string(i);
    auto t = as_strings(jc[i], cp);
    if (t.size() != 3) fail(cp, "expected [g, f, g o f]");
    const int a = lookup(midx, t[0], cp), b = lookup(midx, t[1], cp), c = lookup(midx, t[2], cp);
    if (table[a * m + b] >= 0) fail(cp, "repeated composite");
    table[a * m + b] = c;
  }
  try {
    return FinGroupoid(std::move(objects), std::move(mor), std::move(table), ids, inv);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Json write_functor(const GroupoidFunctor& f) {
  Json j;
  j["source"] = write_groupoid(*f.source);
  j["target"] = write_groupoid(*f.target);
  j["objects"] = write_cell_map(f.objects, f.source->objects(), f.target->objects());
  std::vector<std::string> sm, tm;
  for (const auto& m : f.source->morphisms()) sm.push_back(m.name);
  for (const auto& m : f.target->morphisms()) tm.push_back(m.name);
  j["morphisms"] = write_cell_map(f.morphisms, sm, tm);
  return j;
}

GroupoidFunctor read_functor(const Json& j, const std::string& path) {
  auto src = std::make_shared<const FinGroupoid>(read_groupoid(member(j, "source", path), path + "/source"));
  auto tgt = std::make_shared<const FinGroupoid>(read_groupoid(member(j, "target", path), path + "/target"));
  std::vector<std::string> sm, tm;
  for (const auto& m : src->morphisms()) sm.push_back(m.name);
  for (const auto& m : tgt->morphisms()) tm.push_back(m.name);
  auto obj = read_cell_map(member(j, "objects", path), src->objects(), index_names(src->objects(), path),
                           index_names(tgt->objects(), path), path + "/objects");
  auto mor = read_cell_map(member(j, "morphisms", path), sm, index_names(sm, path), index_names(tm, path),
                           path + "/morphisms");
  return make_functor(src, tgt, std::move(obj), std::move(mor));
}

Json write_nfunctor(const MultiSSetMap& f) {
  Json j;
  j["source"] = write_multisset(*f.source);
  j["target"] = write_multisset(*f.target);
  Json levels = Json::array();
  for (std::size_t l = 0; l < f.levels.size(); ++l) {
    levels.push_back(Json{{"index", f.source->multi_index(l)},
                          {"map", write_cell_map(f.levels[l], f.source->level_at(l).names, f.target->level_at(l).names)}});
  }
  j["levels"] = std::move(levels);
  return j;
}

MultiSSetMap read_nfunctor(const Json& j, const std::string& path) {
  auto src = std::make_shared<const MultiSSet>(read_multisset(member(j, "source", path), path + "/source"));
  auto tgt = std::make_shared<const MultiSSet>(read_multisset(member(j, "target", path), path + "/target"));
  if (src->dim_bounds() != tgt->dim_bounds()) fail(path, "source and target dim_bounds differ");
  const Json& jl = member(j, "levels", path);
  if (!jl.is_array() || jl.size() != src->level_count()) fail(path + "/levels", "expected one map per level");
  std::vector<CellMap> levels;
  for (std::size_t l = 0; l < jl.size(); ++l) {
    const std::string lp = path + "/levels/" + std::to_string(l);
    const Json& ji = member(jl[l], "index", lp);
    std::vector<int> at;
    if (ji.is_array())
      for (std::size_t a = 0; a < ji.size(); ++a) at.push_back(as_int(ji[a], lp + "/index"));
    if (at != src->multi_index(l)) fail(lp + "/index", "expected " + index_to_string(src->multi_index(l)));
    const auto& sn = src->level_at(l).names;
    levels.push_back(read_cell_map(member(jl[l], "map", lp), sn, index_names(sn, lp),
                                   index_names(tgt->level_at(l).names, lp), lp + "/map"));
  }
  return MultiSSetMap(src, tgt, std::move(levels));
}

Json report_json(const Report& r, bool witnesses) {
  Json j;
  j["subject"] = r.subject;
  j["verdict"] = to_string(r.verdict());
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc{{"id", c.id}, {"status", to_string(c.status)}};
    if (!c.witness.empty() && (witnesses || c.status != CheckStatus::pass)) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  j["not_checked"] = r.not_checked;
  return j;
}

}  // namespace

const char* to_string(DocumentKind k) { return kKinds[static_cast<int>(k)]; }

std::optional<DocumentKind> parse_kind(std::string_view s) {
  for (int i = 0; i < 6; ++i)
    if (s == kKinds[i]) return static_cast<DocumentKind>(i);
  return std::nullopt;
}

Document::Document(DocumentKind k, Payload p, DocumentMetadata m)
    : kind(k), metadata(std::move(m)), payload(std::move(p)) {
  bool fits = false;
  switch (kind) {
    case DocumentKind::sset: {
      auto* x = std::get_if<MultiSSet>(&payload);
      fits = x && x->arity() == 1;
      break;
    }
    case DocumentKind::multisset:
    case DocumentKind::ngroupoid: {
      auto* x = std::get_if<MultiSSet>(&payload);
      fits = x && x->arity() >= 1;
      break;
    }
    case DocumentKind::groupoid: fits = std::holds_alternative<FinGroupoid>(payload); break;
    case DocumentKind::functor: fits = std::holds_alternative<GroupoidFunctor>(payload); break;
    case DocumentKind::nfunctor: fits = std::holds_alternative<MultiSSetMap>(payload); break;
  }
  if (!fits) throw std::invalid_argument(std::string("payload does not fit document kind ") + to_string(kind));
}

const MultiSSet& Document::carrier() const {
  if (auto* x = std::get_if<MultiSSet>(&payload)) return *x;
  throw std::invalid_argument(std::string("a ") + to_string(kind) + " document has no carrier");
}

SimplicialSet Document::sset() const {
  if (kind != DocumentKind::sset) throw std::invalid_argument(std::string("expected an sset document, got ") + to_string(kind));
  return SimplicialSet(carrier());
}

const FinGroupoid& Document::groupoid() const {
  if (auto* x = std::get_if<FinGroupoid>(&payload)) return *x;
  throw std::invalid_argument(std::string("expected a groupoid document, got ") + to_string(kind));
}

const GroupoidFunctor& Document::functor() const {
  if (auto* x = std::get_if<GroupoidFunctor>(&payload)) return *x;
  throw std::invalid_argument(std::string("expected a functor document, got ") + to_string(kind));
}

const MultiSSetMap& Document::map() const {
  if (auto* x = std::get_if<MultiSSetMap>(&payload)) return *x;
  throw std::invalid_argument(std::string("expected an nfunctor document, got ") + to_string(kind));
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    int line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    // Drop the library's "[json.exception.parse_error.101] parse error at ...: " prefix.
    auto colon = msg.find(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg, line, column,
                     "");
  }
  const auto kind_name = as_string(member(j, "kind", ""), "/kind");
  auto kind = parse_kind(kind_name);
  if (!kind) fail("/kind", "unknown kind '" + kind_name + "'");
  DocumentMetadata meta;
  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) fail("/metadata", "expected an object");
    if (auto n = it->find("name"); n != it->end()) meta.name = as_string(*n, "/metadata/name");
    if (auto p = it->find("provenance"); p != it->end()) meta.provenance = as_string(*p, "/metadata/provenance");
    if (auto s = it->find("seed"); s != it->end()) {
      if (!s->is_number_unsigned()) fail("/metadata/seed", "expected a nonnegative integer");
      meta.seed = s->get<std::uint64_t>();
    }
  }
  const Json& body = member(j, "payload", "");
  try {
    switch (*kind) {
      case DocumentKind::sset: {
        auto x = read_multisset(body, "/payload");
        if (x.arity() != 1) fail("/payload/dim_bounds", "an sset has exactly one axis");
        return Document(*kind, std::move(x), std::move(meta));
      }
      case DocumentKind::multisset:
      case DocumentKind::ngroupoid: return Document(*kind, read_multisset(body, "/payload"), std::move(meta));
      case DocumentKind::groupoid: return Document(*kind, read_groupoid(body, "/payload"), std::move(meta));
      case DocumentKind::functor: return Document(*kind, read_functor(body, "/payload"), std::move(meta));
      case DocumentKind::nfunctor: return Document(*kind, read_nfunctor(body, "/payload"), std::move(meta));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail("/payload", e.what());
  }
  fail("/kind", "unsupported kind");
}

std::string serialize_document(const Document& d) {
  Json j;
  j["kind"] = to_string(d.kind);
  j["metadata"] = Json{{"name", d.metadata.name}, {"seed", d.metadata.seed}, {"provenance", d.metadata.provenance}};
  switch (d.kind) {
    case DocumentKind::sset:
    case DocumentKind::multisset:
    case DocumentKind::ngroupoid: j["payload"] = write_multisset(d.carrier()); break;
    case DocumentKind::groupoid: j["payload"] = write_groupoid(d.groupoid()); break;
    case DocumentKind::functor: j["payload"] = write_functor(d.functor()); break;
    case DocumentKind::nfunctor: j["payload"] = write_nfunctor(d.map()); break;
  }
  return j.dump(2) + "\n";
}

std::string report_to_json(const Report& r, bool witnesses) { return report_json(r, witnesses).dump(2) + "\n"; }

}  // namespace ngpd
