#include "tdeg/json_io.hpp"

#include <map>

#include "tdeg/error.hpp"

namespace tdeg {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw Error(ErrorKind::Schema, std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorKind::Schema, std::string("missing field '") + name + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) throw Error(ErrorKind::Schema, std::string("field '") + name + "' must be an array");
  return a;
}

std::uint64_t u64_field(const Json& j, const char* name, std::uint64_t fallback) {
  auto it = j.find(name);
  if (it == j.end()) return fallback;
  if (!it->is_number_unsigned()) throw Error(ErrorKind::Schema, std::string("field '") + name + "' must be a nonnegative integer");
  return it->get<std::uint64_t>();
}

Integer integer_of(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorKind::Schema, "expected an integer or integer string");
}

Json encode_int(const Integer& z) { return z.get_str(); }

Json encode_claims(const std::vector<TransductionClaim>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) out.push_back(encode(c));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

Json encode(const Rat& r) { return to_string(r); }

Rat decode_rat(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(integer_of(j));
  throw Error(ErrorKind::Schema, "rationals are strings like \"3/4\"");
}

Json encode(const Poly& p) {
  Json cs = Json::array();
  for (const Rat& c : p.coeffs()) cs.push_back(encode(c));
  return Json{{"coeffs", cs}};
}

Poly decode_poly(const Json& j) {
  std::vector<Rat> cs;
  for (const Json& c : array_field(j, "coeffs")) cs.push_back(decode_rat(c));
  return Poly(std::move(cs));
}

Json encode(const Weight& w) {
  Json es = Json::array();
  for (const Rat& e : w.entries()) es.push_back(encode(e));
  return Json{{"entries", es}, {"constant", encode(w.constant())}};
}

Weight decode_weight(const Json& j) {
  std::vector<Rat> es;
  for (const Json& e : array_field(j, "entries")) es.push_back(decode_rat(e));
  const Rat constant = j.contains("constant") ? decode_rat(j.at("constant")) : Rat(0);
  try {
    return Weight(std::move(es), constant);
  } catch (const Error& e) {
    throw Error(ErrorKind::Schema, e.what());
  }
}

Json encode(const WeightTuple& t) {
  Json ws = Json::array();
  for (const Weight& w : t.weights()) ws.push_back(encode(w));
  return Json{{"weights", ws}};
}

WeightTuple decode_tuple(const Json& j) {
  std::vector<Weight> ws;
  for (const Json& w : array_field(j, "weights")) ws.push_back(decode_weight(w));
  if (ws.empty()) throw Error(ErrorKind::Schema, "a weight tuple needs at least one weight");
  return WeightTuple(std::move(ws));
}

Json encode(const Fst& f) {
  Json states = Json::array();
  Json transitions = Json::array();
  for (std::size_t q = 0; q < f.size(); ++q) {
    states.push_back(q);
    for (int b = 0; b < 2; ++b) {
      const Transition& t = f.at(static_cast<StateId>(q), b);
      transitions.push_back(Json{{"from", q}, {"input", b}, {"to", t.to}, {"output", t.out}});
    }
  }
  return Json{{"states", states}, {"initial", f.initial()}, {"transitions", transitions}};
}

Fst decode_fst(const Json& j) {
  const Json& states = array_field(j, "states");
  std::map<std::string, StateId> index;
  for (const Json& s : states) {
    if (!s.is_string() && !s.is_number_integer()) throw Error(ErrorKind::Schema, "state ids must be strings or integers");
    if (!index.emplace(s.dump(), static_cast<StateId>(index.size())).second)
      throw Error(ErrorKind::Schema, "duplicate state " + s.dump());
  }
  if (index.empty()) throw Error(ErrorKind::Schema, "transducer has no states");
  auto lookup = [&](const Json& s) {
    auto it = index.find(s.dump());
    if (it == index.end()) throw Error(ErrorKind::Schema, "unknown state " + s.dump());
    return it->second;
  };
  const Json& transitions = array_field(j, "transitions");
  if (transitions.size() != 2 * index.size())
    throw Error(ErrorKind::Schema, "expected exactly " + std::to_string(2 * index.size()) + " transitions, got " +
                                       std::to_string(transitions.size()));
  std::vector<std::array<Transition, 2>> table(index.size());
  std::vector<std::array<bool, 2>> seen(index.size(), {false, false});
  for (const Json& t : transitions) {
    const StateId from = lookup(field(t, "from"));
    const Json& input = field(t, "input");
    if (!input.is_number_integer() || (input.get<int>() != 0 && input.get<int>() != 1))
      throw Error(ErrorKind::Schema, "transition input must be 0 or 1");
    const int b = input.get<int>();
    if (seen[from][static_cast<std::size_t>(b)]) throw Error(ErrorKind::Schema, "duplicate transition for state " + field(t, "from").dump());
    seen[from][static_cast<std::size_t>(b)] = true;
    const Json& out = field(t, "output");
    if (!out.is_string() || !is_bitword(out.get<std::string>())) throw Error(ErrorKind::Schema, "output must be a bit string");
    table[from][static_cast<std::size_t>(b)] = Transition{lookup(field(t, "to")), out.get<std::string>()};
  }
  return Fst(std::move(table), lookup(field(j, "initial")));
}

Json encode(const StreamSpec& s) {
  return Json{{"poly", encode(s.poly)}, {"offset", encode_int(s.offset)}, {"start", encode_int(s.start)}};
}

StreamSpec decode_stream(const Json& j) {
  StreamSpec s;
  s.poly = decode_poly(field(j, "poly"));
  s.offset = j.contains("offset") ? integer_of(j.at("offset")) : Integer(0);
  s.start = j.contains("start") ? integer_of(j.at("start")) : Integer(0);
  return s;
}

Json encode(const TransductionClaim& c) {
  return Json{{"source", encode(c.source)},
              {"target", encode(c.target)},
              {"weight", encode(c.weight)},
              {"skip", c.skip},
              {"target_shift", c.target_shift},
              {"constant_delta", encode(c.constant_delta)},
              {"note", c.note}};
}

TransductionClaim decode_claim(const Json& j) {
  TransductionClaim c;
  c.source = decode_poly(field(j, "source"));
  c.target = decode_poly(field(j, "target"));
  c.weight = decode_weight(field(j, "weight"));
  c.skip = u64_field(j, "skip", 0);
  c.target_shift = u64_field(j, "target_shift", 0);
  c.constant_delta = j.contains("constant_delta") ? decode_rat(j.at("constant_delta")) : Rat(0);
  if (j.contains("note") && j.at("note").is_string()) c.note = j.at("note").get<std::string>();
  return c;
}

Json encode(const TransductionCertificate& c) {
  Json stages = Json::array();
  for (const Fst& f : c.stages) stages.push_back(encode(f));
  return Json{{"kind", "transduction"},
              {"claim", encode(c.claim)},
              {"source", encode(c.source)},
              {"target", encode(c.target)},
              {"source_scale", encode_int(c.source_scale)},
              {"target_scale", encode_int(c.target_scale)},
              {"machine_weight", encode(c.machine_weight)},
              {"scale", encode_int(c.scale)},
              {"removed", encode_int(c.removed)},
              {"prefix", c.prefix},
              {"stages", stages},
              {"fst", c.composed ? encode(*c.composed) : Json(nullptr)}};
}

Json encode(const Reduce2Certificate& c) {
  Json terms = Json::array();
  for (const auto& [pos, coeff] : c.terms) terms.push_back(Json{{"position", pos}, {"coefficient", encode(coeff)}});
  return Json{{"kind", "reduce2"},
              {"a", encode(c.a)},
              {"b", encode(c.b)},
              {"p", c.p},
              {"r", c.r},
              {"s", c.s},
              {"swapped", c.swapped},
              {"d", encode(c.d)},
              {"j", c.j},
              {"k", c.k},
              {"a1", encode(c.a1)},
              {"a2", encode(c.a2)},
              {"a3", encode(c.a3)},
              {"case", c.r_positive ? "r>0" : "r=0"},
              {"period", c.period},
              {"base_shift", c.base_shift},
              {"terms", terms},
              {"constant_delta", encode(c.constant_delta)},
              {"erratum", Json{{"a2_printed", encode(c.a2_printed)}, {"a2_used", encode(c.a2)},
                               {"note", "a2 = dj/((k-1)k^2(jk+k-2)); the (k+1) variant does not match the n^2, n terms"}}},
              {"claim", encode(c.claim())}};
}

Json encode(const CanonCertificate& c) {
  Json out{{"kind", "canon"},
           {"a", encode_int(c.a)},
           {"b", encode_int(c.b)},
           {"shift", encode_int(c.shift_q)},
           {"b0", encode_int(c.b0)},
           {"gcd", encode_int(c.g)},
           {"a_reduced", encode_int(c.a_reduced)},
           {"b_reduced", encode_int(c.b_reduced)},
           {"order_i", c.order_i ? encode_int(*c.order_i) : Json(nullptr)},
           {"order_m", c.order_m ? encode_int(*c.order_m) : Json(nullptr)},
           {"canonical", encode_int(c.canonical)},
           {"chain", c.chain}};
  std::vector<std::string> omitted;
  out["claims"] = encode_claims(c.claims(4096, &omitted));
  out["omitted"] = omitted;
  return out;
}

Json encode(const Classification& c) {
  Json out{{"kind", "classification"},
           {"degree", to_string(c.degree)},
           {"weight", encode(c.weight)},
           {"shift", c.shift},
           {"product", encode(c.product)},
           {"chain", c.chain},
           {"claims", encode_claims(c.claims)},
           {"omitted", c.omitted}};
  if (c.reduce2) {
    out["reduce2"] = encode(*c.reduce2);
    out["reduce2_outer_shift"] = encode(c.reduce2_outer_shift);
  }
  if (c.canon) out["canon"] = encode(*c.canon);
  if (c.bottom) {
    Json support = Json::array();
    for (std::size_t i : c.bottom->witness.support) support.push_back(i);
    out["bottom"] = Json{{"q_eps", encode(c.bottom->q_eps)},
                         {"weight", encode(c.bottom->witness.weight)},
                         {"support", support},
                         {"constant_delta", encode(c.bottom->witness.constant_delta)}};
  }
  return out;
}

Json encode(const Lattice& l) {
  Json nodes = Json::array();
  for (const auto& n : l.nodes) nodes.push_back(Json{{"id", n.id}, {"label", n.label}, {"degree", to_string(n.degree)}});
  Json edges = Json::array();
  for (const auto& e : l.edges)
    edges.push_back(Json{{"upper", e.upper}, {"lower", e.lower}, {"kind", e.meta ? "meta" : "cover"}});
  return Json{{"max", l.max}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace tdeg
