#include "uakit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace uakit {

namespace {

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_kind(const json& doc, const std::string& kind) {
  if (!doc.is_object()) throw FormatError("expected a JSON object");
  const std::string got = document_kind(doc);
  if (got != kind) throw FormatError("expected kind \"" + kind + "\", got \"" + got + "\"");
}

int read_agents(const json& doc) {
  int n = field(doc, "agents").get<int>();
  if (n < 1) throw FormatError("agents must be at least 1");
  return n;
}

// Wrap library exceptions raised while reading a document.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

std::string projection_key(const Vocabulary& v, AtomSet from, AtomSet to) { return v.key(from) + "->" + v.key(to); }

json state_list(const HMSFrame& f, const StateSet& x) {
  json out = json::array();
  for (auto s = x.find_first(); s != StateSet::npos; s = x.find_next(s)) out.push_back(f.name(static_cast<StateId>(s)));
  return out;
}

StateSet read_states(const HMSFrame& f, const json& list) {
  StateSet out = f.empty_set();
  for (const auto& name : list) out.set(f.state(name.get<std::string>()));
  return out;
}

Correspondence read_correspondence(const HMSFrame& f, int agents, const json& doc, const char* what, bool blocks_ok) {
  if (!doc.is_array() || static_cast<int>(doc.size()) != agents)
    throw FormatError(std::string(what) + " needs one entry per agent");
  Correspondence out(agents, std::vector<StateSet>(f.num_states(), f.empty_set()));
  for (int i = 0; i < agents; ++i) {
    const json& entry = doc[i];
    if (entry.is_object()) {
      for (StateId s = 0; s < f.num_states(); ++s) {
        auto it = entry.find(f.name(s));
        if (it == entry.end()) throw FormatError(std::string(what) + " of agent " + std::to_string(i + 1) + " misses " + f.name(s));
        out[i][s] = read_states(f, *it);
      }
    } else if (entry.is_array() && blocks_ok) {
      for (const auto& block : entry) {
        StateSet set = read_states(f, block);
        for (auto s = set.find_first(); s != StateSet::npos; s = set.find_next(s)) {
          if (out[i][s].any()) throw FormatError(std::string(what) + " blocks of agent " + std::to_string(i + 1) + " overlap");
          out[i][s] = set;
        }
      }
    } else {
      throw FormatError(std::string(what) + " entries must be objects" + (blocks_ok ? " or block lists" : ""));
    }
  }
  return out;
}

json correspondence_json(const HMSFrame& f, const Correspondence& c) {
  json out = json::array();
  for (const auto& row : c) {
    json entry = json::object();
    for (StateId s = 0; s < f.num_states(); ++s) entry[f.name(s)] = state_list(f, row[s]);
    out.push_back(std::move(entry));
  }
  return out;
}

json fh_body(const FHModel& k) {
  const Vocabulary& v = k.vocabulary;
  json doc;
  doc["kind"] = "fh";
  doc["atoms"] = v.names_of(k.vocab);
  doc["agents"] = k.agents;
  doc["worlds"] = k.worlds;
  json val = json::object();
  for (int p : k.vocab.members()) {
    json ws = json::array();
    for (int w = 0; w < k.num_worlds(); ++w)
      if (k.valuation[p].test(w)) ws.push_back(k.worlds[w]);
    val[v.name(p)] = std::move(ws);
  }
  doc["valuation"] = std::move(val);
  json rel = json::array();
  for (const auto& blocks : k.relations) {
    json agent = json::array();
    for (const auto& block : blocks) {
      json b = json::array();
      for (int w : block) b.push_back(k.worlds[w]);
      agent.push_back(std::move(b));
    }
    rel.push_back(std::move(agent));
  }
  doc["relations"] = std::move(rel);
  json aw = json::array();
  for (const auto& row : k.awareness) {
    json agent = json::object();
    for (int w = 0; w < k.num_worlds(); ++w) agent[k.worlds[w]] = v.names_of(row[w]);
    aw.push_back(std::move(agent));
  }
  doc["awareness"] = std::move(aw);
  return doc;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc, bool pretty) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
  if (!out) throw IoError("failed writing " + path);
}

std::string document_kind(const json& doc) {
  if (!doc.is_object()) return "";
  auto it = doc.find("kind");
  if (it == doc.end() || !it->is_string()) return "";
  return it->get<std::string>();
}

json fh_to_json(const FHModel& k) { return fh_body(k); }

FHModel fh_from_json(const json& doc) {
  expect_kind(doc, "fh");
  return guarded("fh model", [&] {
    FHModel k;
    k.vocabulary = Vocabulary(field(doc, "atoms").get<std::vector<std::string>>());
    k.vocab = k.vocabulary.all();
    k.agents = read_agents(doc);
    k.worlds = field(doc, "worlds").get<std::vector<std::string>>();
    if (k.worlds.empty()) throw FormatError("an FH model needs at least one world");
    const int n = k.num_worlds();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < a; ++b)
        if (k.worlds[a] == k.worlds[b]) throw FormatError("duplicate world '" + k.worlds[a] + "'");

    k.valuation.assign(k.vocabulary.size(), WorldSet(n));
    for (const auto& [atom, worlds] : field(doc, "valuation").items()) {
      auto id = k.vocabulary.find(atom);
      if (!id) throw FormatError("valuation names unknown atom '" + atom + "'");
      for (const auto& w : worlds) k.valuation[*id].set(k.world(w.get<std::string>()));
    }

    const json& rel = field(doc, "relations");
    if (!rel.is_array() || static_cast<int>(rel.size()) != k.agents)
      throw FormatError("relations need one block list per agent");
    for (const auto& blocks : rel) {
      std::vector<std::vector<int>> agent;
      for (const auto& block : blocks) {
        std::vector<int> b;
        for (const auto& w : block) b.push_back(k.world(w.get<std::string>()));
        agent.push_back(std::move(b));
      }
      k.relations.push_back(std::move(agent));
    }

    const json& aw = field(doc, "awareness");
    if (!aw.is_array() || static_cast<int>(aw.size()) != k.agents)
      throw FormatError("awareness needs one object per agent");
    for (const auto& entry : aw) {
      std::vector<AtomSet> row(n);
      for (int w = 0; w < n; ++w) {
        auto it = entry.find(k.worlds[w]);
        if (it == entry.end()) throw FormatError("awareness misses world '" + k.worlds[w] + "'");
        for (const auto& a : *it) {
          auto id = k.vocabulary.find(a.get<std::string>());
          if (!id) throw FormatError("awareness names unknown atom '" + a.get<std::string>() + "'");
          row[w] |= AtomSet::single(*id);
        }
      }
      k.awareness.push_back(std::move(row));
    }
    return k;
  });
}

json hms_to_json(const HMSModel& m) {
  const HMSFrame& f = m.frame;
  const Vocabulary& v = f.vocabulary();
  json doc;
  doc["kind"] = "hms";
  doc["atoms"] = v.names();
  doc["agents"] = m.agents;
  json spaces = json::object();
  json proj = json::object();
  for (int mask = 0; mask < f.num_spaces(); ++mask) {
    const AtomSet phi = AtomSet::from_bits(mask);
    json names = json::array();
    for (StateId s : f.space(phi)) names.push_back(f.name(s));
    spaces[v.key(phi)] = std::move(names);
    for (int x : phi.members()) {
      const AtomSet psi = phi - AtomSet::single(x);
      json map = json::object();
      for (StateId s : f.space(phi)) map[f.name(s)] = f.name(f.cover(s, x));
      proj[projection_key(v, phi, psi)] = std::move(map);
    }
  }
  doc["spaces"] = std::move(spaces);
  doc["projections"] = std::move(proj);
  json val = json::object();
  for (int p = 0; p < v.size() && p < static_cast<int>(m.valuation.size()); ++p) {
    const Event& e = m.valuation[p];
    val[v.name(p)] = json{{"space", v.key(e.space)}, {"base", state_list(f, e.base)}};
  }
  doc["valuation"] = std::move(val);
  if (m.pi) doc["pi"] = correspondence_json(f, *m.pi);
  if (m.lambda) doc["lambda"] = correspondence_json(f, *m.lambda);
  if (m.alpha) {
    json al = json::array();
    for (const auto& row : *m.alpha) {
      json entry = json::object();
      for (StateId s = 0; s < f.num_states(); ++s) entry[f.name(s)] = v.key(row[s]);
      al.push_back(std::move(entry));
    }
    doc["alpha"] = std::move(al);
  }
  return doc;
}

HMSModel hms_from_json(const json& doc) {
  expect_kind(doc, "hms");
  return guarded("hms model", [&] {
    HMSModel m;
    Vocabulary v(field(doc, "atoms").get<std::vector<std::string>>());
    m.agents = read_agents(doc);

    std::vector<std::pair<AtomSet, std::vector<std::string>>> spaces;
    for (const auto& [key, names] : field(doc, "spaces").items())
      spaces.emplace_back(v.parse_key(key), names.get<std::vector<std::string>>());
    std::sort(spaces.begin(), spaces.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FrameBuilder b(v);
    std::map<std::string, StateId> ids;
    for (const auto& [phi, names] : spaces) {
      for (const auto& n : names) {
        if (ids.count(n)) throw FormatError("state '" + n + "' appears twice");
        ids[n] = b.add_state(n, phi);
      }
    }
    auto lookup = [&](const std::string& n) {
      auto it = ids.find(n);
      if (it == ids.end()) throw FormatError("unknown state '" + n + "'");
      return it->second;
    };
    for (const auto& [key, map] : field(doc, "projections").items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos) throw FormatError("projection key '" + key + "' lacks '->'");
      const AtomSet target = v.parse_key(key.substr(arrow + 2));
      for (const auto& [from, to] : map.items()) b.set_projection(lookup(from), target, lookup(to.get<std::string>()));
    }
    m.frame = b.build();
    const HMSFrame& f = m.frame;

    const json& val = field(doc, "valuation");
    for (int p = 0; p < v.size(); ++p) {
      auto it = val.find(v.name(p));
      if (it == val.end()) throw FormatError("valuation misses atom '" + v.name(p) + "'");
      const AtomSet space = v.parse_key(field(*it, "space").get<std::string>());
      StateSet base = read_states(f, field(*it, "base"));
      if (!base.is_subset_of(f.space_set(space)))
        throw FormatError("base of v(" + v.name(p) + ") is not inside S_{" + v.key(space) + "}");
      m.valuation.push_back(make_event(f, space, base));
    }
    if (doc.contains("pi")) m.pi = read_correspondence(f, m.agents, doc["pi"], "pi", false);
    if (doc.contains("lambda")) m.lambda = read_correspondence(f, m.agents, doc["lambda"], "lambda", true);
    if (doc.contains("alpha")) {
      const json& al = doc["alpha"];
      if (!al.is_array() || static_cast<int>(al.size()) != m.agents)
        throw FormatError("alpha needs one object per agent");
      AwarenessFn alpha;
      for (const auto& entry : al) {
        std::vector<AtomSet> row(f.num_states());
        for (StateId s = 0; s < f.num_states(); ++s) {
          auto it = entry.find(f.name(s));
          if (it == entry.end()) throw FormatError("alpha misses state '" + f.name(s) + "'");
          row[s] = v.parse_key(it->get<std::string>());
        }
        alpha.push_back(std::move(row));
      }
      m.alpha = std::move(alpha);
    }
    return m;
  });
}

json category_to_json(const FHCategory& c) {
  return json{{"kind", "fh-category"}, {"mode", to_string(c.mode)}, {"base", fh_body(c.base)}};
}

json category_dump(const FHCategory& c) {
  const Vocabulary& v = c.vocabulary;
  json doc{{"kind", "fh-category-dump"}, {"mode", to_string(c.mode)}, {"atoms", v.names_of(c.at)}};
  json models = json::object();
  for (const auto& [phi, k] : c.models) models[v.key(phi)] = fh_body(k);
  doc["models"] = std::move(models);
  json maps = json::object();
  for (const auto& [key, f] : c.morphisms) {
    const FHModel& src = c.model(key.first);
    const FHModel& dst = c.model(key.second);
    json map = json::object();
    for (std::size_t w = 0; w < f.size(); ++w) map[src.worlds[w]] = dst.worlds[f[w]];
    maps[projection_key(v, key.first, key.second)] = std::move(map);
  }
  doc["morphisms"] = std::move(maps);
  return doc;
}

FHCategory category_from_json(const json& doc) {
  expect_kind(doc, "fh-category");
  RestrictMode mode = RestrictMode::Copy;
  if (doc.contains("mode")) mode = guarded("category", [&] { return parse_restrict_mode(doc["mode"].get<std::string>()); });
  FHModel base = fh_from_json(field(doc, "base"));
  return build_category(base, mode);
}

json report_to_json(const ValidationReport& r) {
  json findings = json::array();
  for (const auto& f : r.findings())
    findings.push_back({{"clause", f.clause},
                        {"severity", f.severity == Severity::Error ? "error" : "warning"},
                        {"detail", f.detail}});
  return json{{"ok", r.ok()}, {"failed", r.failed_clauses()}, {"findings", std::move(findings)}};
}

json report_to_json(const PropertyReport& r) {
  json results = json::array();
  for (const auto& p : r.results)
    results.push_back({{"group", p.group},
                       {"name", p.name},
                       {"instances", p.instances},
                       {"failures", p.failures},
                       {"witnesses", p.witnesses}});
  return json{{"ok", r.ok()}, {"instances", r.instances()}, {"failures", r.failures()}, {"results", std::move(results)}};
}

json report_to_json(const SoundnessReport& r, const Vocabulary& v) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"schema", f.schema}, {"instance", print_formula(f.instance, v)}, {"witness", f.witness}});
  return json{{"ok", r.ok()},           {"pool", r.pool},
              {"classes", r.classes},   {"instances", r.instances},
              {"per_schema", r.per_schema}, {"failures", std::move(failures)}};
}

json report_to_json(const EquivalenceReport& r, const Vocabulary& v) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"formula", print_formula(w.formula, v)}, {"detail", w.detail}});
  return json{{"ok", r.ok()}, {"classes", r.classes}, {"checks", r.checks}, {"witnesses", std::move(witnesses)}};
}

json trace_to_json(const TransformTrace& t, const FHModel& source, const HMSModel& target) {
  const Vocabulary& v = target.frame.vocabulary();
  json doc{{"source_digest", t.source_digest}, {"target", t.target}, {"steps", t.steps}};
  json maps = json::object();
  for (const auto& [phi, row] : t.world_to_state) {
    json map = json::object();
    for (std::size_t w = 0; w < row.size(); ++w) map[source.worlds[w]] = target.frame.name(row[w]);
    maps[v.key(phi)] = std::move(map);
  }
  doc["world_to_state"] = std::move(maps);
  return doc;
}

json trace_to_json(const TransformTrace& t, const HMSModel& source, const FHModel& target) {
  json doc{{"source_digest", t.source_digest}, {"target", t.target}, {"steps", t.steps}};
  json map = json::object();
  for (std::size_t w = 0; w < t.state_of_world.size(); ++w)
    map[target.worlds[w]] = source.frame.name(t.state_of_world[w]);
  doc["state_of_world"] = std::move(map);
  return doc;
}

std::string digest(const json& doc) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : doc.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace uakit
