#include "muflow/io.hpp"

#include <json.hpp>
#include <set>

namespace muflow {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw InputError(InputErrorCode::kMalformedDocument, where + ": " + what);
}

[[noreturn]] void dangling(const std::string& where, const std::string& name) {
  throw InputError(InputErrorCode::kDanglingReference,
                   where + ": unknown name '" + name + "'");
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) malformed(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    malformed(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& obj, const char* key,
                        const std::string& where) {
  const Json& value = field(obj, key, where);
  if (!value.is_array()) malformed(where + "." + key, "expected an array");
  return value;
}

std::string name_of(const Json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer())
    return std::to_string(value.get<std::int64_t>());
  malformed(where, "expected a name (string or integer)");
}

Rational length_of(const Json& value, const std::string& where) {
  Rational r;
  try {
    if (value.is_number_integer()) {
      r = Rational(value.get<std::int64_t>());
    } else if (value.is_string()) {
      r = parse_rational(value.get<std::string>());
    } else {
      malformed(where, "expected a rational string");
    }
  } catch (const InputError& e) {
    if (e.code() != InputErrorCode::kMalformedDocument) throw;
    malformed(where, e.what());
  }
  if (r < 0) {
    throw InputError(InputErrorCode::kNegativeLength,
                     where + ": negative length");
  }
  return r;
}

Capacity capacity_of(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) malformed(where, "expected an integer");
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) {
      throw InputError(InputErrorCode::kOverflow, where + ": too large");
    }
    return static_cast<Capacity>(u);
  }
  const auto c = value.get<std::int64_t>();
  if (c < 0) {
    throw InputError(InputErrorCode::kNegativeCapacity,
                     where + ": negative capacity " + std::to_string(c));
  }
  return c;
}

template <typename Id>
std::unordered_map<std::string, Id> index_names(
    const std::vector<std::string>& names, const std::string& where) {
  std::unordered_map<std::string, Id> ids;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!ids.emplace(names[i], Id(static_cast<std::int64_t>(i))).second) {
      throw InputError(InputErrorCode::kDuplicateId,
                       where + ": duplicate name '" + names[i] + "'");
    }
  }
  return ids;
}

template <typename Id>
Id lookup(const std::unordered_map<std::string, Id>& ids,
          const std::string& name, const std::string& where) {
  auto it = ids.find(name);
  if (it == ids.end()) dangling(where, name);
  return it->second;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(InputErrorCode::kMalformedDocument,
                     std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Instance::Instance(Network net, RealizationTree real,
                   std::vector<std::string> vertex_names,
                   std::vector<std::string> arc_names,
                   std::vector<std::string> tree_vertex_names)
    : net_(std::move(net)), real_(std::move(real)) {
  auto fill = [](auto& by_id, auto& by_name, const auto& names, auto make_id) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      by_id.emplace(static_cast<std::int64_t>(i), names[i]);
      by_name.emplace(names[i], make_id(static_cast<std::int64_t>(i)));
    }
  };
  fill(vertex_names_, vertex_ids_, vertex_names,
       [](std::int64_t i) { return VertexId(i); });
  fill(arc_names_, arc_ids_, arc_names,
       [](std::int64_t i) { return ArcId(i); });
  fill(tree_vertex_names_, tree_vertex_ids_, tree_vertex_names,
       [](std::int64_t i) { return TreeVertexId(i); });
}

Instance Instance::with_default_names(Network net, RealizationTree real) {
  Instance out;
  for (VertexId v : net.graph().vertices()) {
    const std::string name = "v" + std::to_string(v.value());
    out.vertex_names_.emplace(v.value(), name);
    out.vertex_ids_.emplace(name, v);
  }
  for (const Arc& a : net.graph().arcs()) {
    const std::string name = "a" + std::to_string(a.id.value());
    out.arc_names_.emplace(a.id.value(), name);
    out.arc_ids_.emplace(name, a.id);
  }
  for (TreeVertexId v : real.vertices()) {
    const std::string name = "t" + std::to_string(v.value());
    out.tree_vertex_names_.emplace(v.value(), name);
    out.tree_vertex_ids_.emplace(name, v);
  }
  out.net_ = std::move(net);
  out.real_ = std::move(real);
  return out;
}

Instance Instance::with_tree(RealizationTree real) const {
  Instance out = *this;
  out.real_ = std::move(real);
  return out;
}

const std::string& Instance::vertex_name(VertexId v) const {
  auto it = vertex_names_.find(v.value());
  if (it == vertex_names_.end()) {
    throw InputError(InputErrorCode::kUnknownVertex,
                     "vertex " + std::to_string(v.value()) + " has no name");
  }
  return it->second;
}

const std::string& Instance::arc_name(ArcId a) const {
  auto it = arc_names_.find(a.value());
  if (it == arc_names_.end()) {
    throw InputError(InputErrorCode::kUnknownArc,
                     "arc " + std::to_string(a.value()) + " has no name");
  }
  return it->second;
}

const std::string& Instance::tree_vertex_name(TreeVertexId v) const {
  auto it = tree_vertex_names_.find(v.value());
  if (it == tree_vertex_names_.end()) {
    throw InputError(
        InputErrorCode::kUnknownVertex,
        "tree vertex " + std::to_string(v.value()) + " has no name");
  }
  return it->second;
}

VertexId Instance::vertex(const std::string& name) const {
  return lookup(vertex_ids_, name, "vertex");
}

ArcId Instance::arc(const std::string& name) const {
  return lookup(arc_ids_, name, "arc");
}

TreeVertexId Instance::tree_vertex(const std::string& name) const {
  return lookup(tree_vertex_ids_, name, "tree vertex");
}

Instance parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) malformed("document", "expected an object");

  const Json& graph = field(doc, "graph", "document");
  std::vector<std::string> vertex_names;
  {
    const Json& vs = array_field(graph, "vertices", "graph");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      vertex_names.push_back(
          name_of(vs[i], "graph.vertices[" + std::to_string(i) + "]"));
    }
  }
  const auto vertex_ids = index_names<VertexId>(vertex_names, "graph.vertices");

  std::vector<std::string> arc_names;
  std::vector<ArcSpec> arcs;
  {
    const Json& as = array_field(graph, "arcs", "graph");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string where = "graph.arcs[" + std::to_string(i) + "]";
      const Json& a = as[i];
      arc_names.push_back(name_of(field(a, "id", where), where + ".id"));
      ArcSpec spec;
      spec.id = ArcId(static_cast<std::int64_t>(i));
      spec.tail =
          lookup(vertex_ids, name_of(field(a, "tail", where), where + ".tail"),
                 where + ".tail");
      spec.head =
          lookup(vertex_ids, name_of(field(a, "head", where), where + ".head"),
                 where + ".head");
      spec.capacity = capacity_of(field(a, "cap", where), where + ".cap");
      arcs.push_back(spec);
    }
  }
  index_names<ArcId>(arc_names, "graph.arcs");

  std::vector<VertexId> terminals;
  {
    const Json& ts = array_field(doc, "terminals", "document");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::string where = "terminals[" + std::to_string(i) + "]";
      terminals.push_back(lookup(vertex_ids, name_of(ts[i], where), where));
    }
  }

  const Json& tree = field(doc, "tree", "document");
  std::vector<std::string> tree_names;
  {
    const Json& vs = array_field(tree, "vertices", "tree");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      tree_names.push_back(
          name_of(vs[i], "tree.vertices[" + std::to_string(i) + "]"));
    }
  }
  const auto tree_ids = index_names<TreeVertexId>(tree_names, "tree.vertices");
  std::vector<TreeVertexId> tree_vertices;
  for (std::size_t i = 0; i < tree_names.size(); ++i) {
    tree_vertices.emplace_back(static_cast<std::int64_t>(i));
  }
  std::vector<TreeEdge> edges;
  {
    const Json& es = array_field(tree, "edges", "tree");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "tree.edges[" + std::to_string(i) + "]";
      const Json& e = es[i];
      TreeEdge edge;
      edge.id = TreeEdgeId(static_cast<std::int64_t>(i));
      edge.u = lookup(tree_ids, name_of(field(e, "u", where), where + ".u"),
                      where + ".u");
      edge.v = lookup(tree_ids, name_of(field(e, "v", where), where + ".v"),
                      where + ".v");
      edge.len_uv = length_of(field(e, "len_uv", where), where + ".len_uv");
      edge.len_vu = length_of(field(e, "len_vu", where), where + ".len_vu");
      edges.push_back(std::move(edge));
    }
  }

  RealizationTree::SubtreeMap subtrees;
  {
    const Json& subs = field(doc, "subtrees", "document");
    if (!subs.is_object()) malformed("subtrees", "expected an object");
    const std::set<VertexId> terminal_set(terminals.begin(), terminals.end());
    for (const auto& [key, list] : subs.items()) {
      const std::string where = "subtrees." + key;
      const VertexId s = lookup(vertex_ids, key, where);
      if (!terminal_set.contains(s)) {
        throw InputError(InputErrorCode::kDanglingReference,
                         where + ": '" + key + "' is not a terminal");
      }
      if (!list.is_array()) malformed(where, "expected an array");
      std::vector<TreeVertexId> sub;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        sub.push_back(lookup(tree_ids, name_of(list[i], at), at));
      }
      subtrees[s] = std::move(sub);
    }
    for (VertexId t : terminals) {
      if (!subtrees.contains(t)) {
        throw InputError(InputErrorCode::kDanglingReference,
                         "subtrees: terminal '" +
                             vertex_names[static_cast<std::size_t>(t.value())] +
                             "' has no subtree");
      }
    }
  }

  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < vertex_names.size(); ++i) {
    vertices.emplace_back(static_cast<std::int64_t>(i));
  }
  Network net(std::move(vertices), std::move(arcs), std::move(terminals));
  RealizationTree real(std::move(tree_vertices), std::move(edges),
                       std::move(subtrees));
  return Instance(std::move(net), std::move(real), std::move(vertex_names),
                  std::move(arc_names), std::move(tree_names));
}

std::string serialize_instance(const Instance& instance) {
  const Network& net = instance.net();
  const RealizationTree& real = instance.real();
  Json doc;
  Json vertices = Json::array();
  for (VertexId v : net.graph().vertices()) {
    vertices.push_back(instance.vertex_name(v));
  }
  Json arcs = Json::array();
  for (const ArcSpec& a : net.arc_specs()) {
    arcs.push_back({{"id", instance.arc_name(a.id)},
                    {"tail", instance.vertex_name(a.tail)},
                    {"head", instance.vertex_name(a.head)},
                    {"cap", a.capacity}});
  }
  doc["graph"] = {{"vertices", vertices}, {"arcs", arcs}};
  Json terminals = Json::array();
  for (VertexId t : net.terminals())
    terminals.push_back(instance.vertex_name(t));
  doc["terminals"] = terminals;

  Json tree_vertices = Json::array();
  for (TreeVertexId v : real.vertices()) {
    tree_vertices.push_back(instance.tree_vertex_name(v));
  }
  Json edges = Json::array();
  for (const TreeEdge& e : real.edges()) {
    edges.push_back({{"u", instance.tree_vertex_name(e.u)},
                     {"v", instance.tree_vertex_name(e.v)},
                     {"len_uv", format_rational(e.len_uv)},
                     {"len_vu", format_rational(e.len_vu)}});
  }
  doc["tree"] = {{"vertices", tree_vertices}, {"edges", edges}};
  Json subtrees = Json::object();
  for (VertexId t : net.terminals()) {
    Json list = Json::array();
    for (TreeVertexId v : real.subtree(t)) {
      list.push_back(instance.tree_vertex_name(v));
    }
    subtrees[instance.vertex_name(t)] = list;
  }
  doc["subtrees"] = subtrees;
  return doc.dump(2) + "\n";
}

std::string serialize_result(const Instance& instance, const SolveOutput& out,
                             bool include_paths) {
  Json doc;
  doc["value"] = format_rational(out.value);
  if (include_paths) {
    Json paths = Json::array();
    for (const WeightedPath& p : to_paths(instance.net(), out.multiflow)) {
      Json arcs = Json::array();
      for (ArcId a : p.arcs) arcs.push_back(instance.arc_name(a));
      paths.push_back({{"from", instance.vertex_name(p.from)},
                       {"to", instance.vertex_name(p.to)},
                       {"arcs", arcs},
                       {"weight", p.weight}});
    }
    doc["paths"] = paths;
  }
  Json certificate = Json::array();
  for (const auto& [arc, cut] : out.certificate.cuts) {
    Json side = Json::array();
    for (VertexId v : cut.source_side())
      side.push_back(instance.vertex_name(v));
    certificate.push_back({{"tree_arc",
                            {instance.tree_vertex_name(arc.from),
                             instance.tree_vertex_name(arc.to)}},
                           {"cut", side}});
  }
  doc["certificate"] = certificate;
  doc["stats"] = {{"n", out.stats.n},
                  {"m", out.stats.m},
                  {"leaf_count", out.stats.leaf_count},
                  {"recursion_depth", out.stats.recursion_depth},
                  {"maxflow_calls", out.stats.maxflow_calls},
                  {"wall_ms", out.stats.wall_ms}};
  return doc.dump(2) + "\n";
}

ResultDocument parse_result(const Instance& instance, std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) malformed("result", "expected an object");
  ResultDocument out;
  {
    const Json& value = field(doc, "value", "result");
    if (!value.is_string() && !value.is_number_integer()) {
      malformed("result.value", "expected a rational string");
    }
    try {
      out.value = value.is_string() ? parse_rational(value.get<std::string>())
                                    : Rational(value.get<std::int64_t>());
    } catch (const InputError& e) {
      malformed("result.value", e.what());
    }
  }
  auto vertex = [&](const Json& j, const std::string& where) {
    const std::string name = name_of(j, where);
    try {
      return instance.vertex(name);
    } catch (const InputError&) {
      dangling(where, name);
    }
  };
  if (doc.contains("paths")) {
    const Json& paths = array_field(doc, "paths", "result");
    WeightedPathCollection collection;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const std::string where = "result.paths[" + std::to_string(i) + "]";
      const Json& p = paths[i];
      WeightedPath path;
      path.from = vertex(field(p, "from", where), where + ".from");
      path.to = vertex(field(p, "to", where), where + ".to");
      const Json& arcs = array_field(p, "arcs", where);
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        const std::string at = where + ".arcs[" + std::to_string(j) + "]";
        const std::string name = name_of(arcs[j], at);
        try {
          path.arcs.push_back(instance.arc(name));
        } catch (const InputError&) {
          dangling(at, name);
        }
      }
      path.weight = capacity_of(field(p, "weight", where), where + ".weight");
      collection.push_back(std::move(path));
    }
    out.paths = std::move(collection);
  }
  const Json& cert = array_field(doc, "certificate", "result");
  for (std::size_t i = 0; i < cert.size(); ++i) {
    const std::string where = "result.certificate[" + std::to_string(i) + "]";
    const Json& arc = field(cert[i], "tree_arc", where);
    if (!arc.is_array() || arc.size() != 2) {
      malformed(where + ".tree_arc", "expected a pair of tree vertices");
    }
    TreeArc tree_arc;
    for (int k = 0; k < 2; ++k) {
      const std::string name = name_of(arc[k], where + ".tree_arc");
      TreeVertexId v;
      try {
        v = instance.tree_vertex(name);
      } catch (const InputError&) {
        dangling(where + ".tree_arc", name);
      }
      (k == 0 ? tree_arc.from : tree_arc.to) = v;
    }
    const Json& side = array_field(cert[i], "cut", where);
    std::vector<VertexId> vertices;
    for (std::size_t j = 0; j < side.size(); ++j) {
      vertices.push_back(
          vertex(side[j], where + ".cut[" + std::to_string(j) + "]"));
    }
    out.certificate.cuts[tree_arc] = Cut(std::move(vertices));
  }
  if (doc.contains("stats") && doc["stats"].is_object()) {
    const Json& s = doc["stats"];
    out.stats.n = s.value("n", std::size_t{0});
    out.stats.m = s.value("m", std::size_t{0});
    out.stats.leaf_count = s.value("leaf_count", std::size_t{0});
    out.stats.recursion_depth = s.value("recursion_depth", std::size_t{0});
    out.stats.maxflow_calls = s.value("maxflow_calls", std::int64_t{0});
    out.stats.wall_ms = s.value("wall_ms", 0.0);
  }
  return out;
}

}  // namespace muflow
