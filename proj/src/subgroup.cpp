#include "skmono/subgroup.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "skmono/errors.hpp"
#include "skmono/toddcox.hpp"
#include "skmono/words.hpp"

namespace skmono {

namespace {

enum class Family { Full, Gamma, Gamma0, Gamma1, GammaPow, G8412, G161622 };

struct NamedNode {
  Family family;
  long level;
};

struct CongruenceNode {
  long modulus;
  CongruencePredicate pred;
  std::string label;
};

struct GeneratedCache {
  std::mutex mu;
  std::unique_ptr<ToddCoxeterTable> table[2];  // [projective]
};

struct GeneratedNode {
  std::vector<IntMat2> gens;
  int cap = 10000;
  std::shared_ptr<GeneratedCache> cache = std::make_shared<GeneratedCache>();
};

struct ConjugatedNode;
struct IntersectNode;

long reduce_mod(const Int& v, long m) {
  Int r = mod_floor(v, Int(m));
  return static_cast<long>(r);
}

}  // namespace

struct SubgroupSpec::Node {
  std::variant<NamedNode, CongruenceNode, GeneratedNode,
               std::pair<SubgroupSpec, Conjugator>,
               std::pair<SubgroupSpec, SubgroupSpec>>
      v;
};

namespace {

bool named_raw_member(const NamedNode& n, const IntMat2& a) {
  switch (n.family) {
    case Family::Full: return true;
    case Family::Gamma: {
      long m = n.level;
      return reduce_mod(a.a - 1, m) == 0 && reduce_mod(a.b, m) == 0 &&
             reduce_mod(a.c, m) == 0 && reduce_mod(a.d - 1, m) == 0;
    }
    case Family::Gamma0: return reduce_mod(a.c, n.level) == 0;
    case Family::Gamma1: {
      long m = n.level;
      return reduce_mod(a.c, m) == 0 && reduce_mod(a.a - 1, m) == 0 &&
             reduce_mod(a.d - 1, m) == 0;
    }
    case Family::G8412:
      // [[1+4x, 2y],[4z, 1+4w]] with x = z mod 2, i.e. a-1 = c mod 8
      return reduce_mod(a.a - 1, 4) == 0 && reduce_mod(a.b, 2) == 0 &&
             reduce_mod(a.c, 4) == 0 && reduce_mod(a.d - 1, 4) == 0 &&
             reduce_mod(a.a - 1 - a.c, 8) == 0;
    case Family::G161622:
      // [[1+4x, y],[8z, 1+4w]] with x = z mod 2, i.e. 2(a-1) = c mod 16
      return reduce_mod(a.a - 1, 4) == 0 && reduce_mod(a.c, 8) == 0 &&
             reduce_mod(a.d - 1, 4) == 0 &&
             reduce_mod(2 * (a.a - 1) - a.c, 16) == 0;
    case Family::GammaPow: break;
  }
  throw std::logic_error("named_raw_member");
}

const ToddCoxeterTable& generated_table(const GeneratedNode& g, bool projective) {
  std::lock_guard<std::mutex> lock(g.cache->mu);
  auto& slot = g.cache->table[projective ? 1 : 0];
  if (!slot) {
    std::vector<GroupWord> words;
    words.reserve(g.gens.size());
    for (const IntMat2& m : g.gens)
      words.push_back(word_from_st(st_word(m), projective));
    slot = std::make_unique<ToddCoxeterTable>(
        todd_coxeter(words, projective, g.cap));
  }
  return *slot;
}

}  // namespace

SubgroupSpec SubgroupSpec::full() {
  auto node = std::make_shared<const Node>(Node{NamedNode{Family::Full, 1}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::gamma(long m) {
  if (m < 1) throw std::invalid_argument("Gamma(m): m >= 1");
  auto node = std::make_shared<const Node>(Node{NamedNode{Family::Gamma, m}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::gamma0(long m) {
  if (m < 1) throw std::invalid_argument("Gamma0(m): m >= 1");
  auto node = std::make_shared<const Node>(Node{NamedNode{Family::Gamma0, m}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::gamma1(long m) {
  if (m < 1) throw std::invalid_argument("Gamma1(m): m >= 1");
  auto node = std::make_shared<const Node>(Node{NamedNode{Family::Gamma1, m}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::gamma_pow(int n) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("GammaPow(n): only n in {2,3} supported");
  auto node = std::make_shared<const Node>(Node{NamedNode{Family::GammaPow, n}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::gamma1_8_4_1_2() {
  auto node = std::make_shared<const Node>(Node{NamedNode{Family::G8412, 8}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::gamma1_16_16_2_2() {
  auto node = std::make_shared<const Node>(Node{NamedNode{Family::G161622, 16}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::congruence(long modulus, CongruencePredicate pred,
                                      std::string label) {
  if (modulus < 1) throw std::invalid_argument("congruence: modulus >= 1");
  auto node = std::make_shared<const Node>(
      Node{CongruenceNode{modulus, std::move(pred), std::move(label)}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::generated(std::vector<IntMat2> gens, int cap) {
  for (const IntMat2& g : gens) {
    if (!is_unimodular(g))
      throw NotUnimodular("Generated: generator with det != 1");
  }
  auto node = std::make_shared<const Node>(
      Node{GeneratedNode{std::move(gens), cap}});
  return SubgroupSpec(std::move(node), true);
}

SubgroupSpec SubgroupSpec::conjugated(SubgroupSpec base, Conjugator by) {
  bool projective = base.projective();
  auto node = std::make_shared<const Node>(
      Node{std::make_pair(std::move(base), std::move(by))});
  return SubgroupSpec(std::move(node), projective);
}

SubgroupSpec SubgroupSpec::intersection(SubgroupSpec a, SubgroupSpec b) {
  bool projective = a.projective();
  auto node = std::make_shared<const Node>(
      Node{std::make_pair(std::move(a), std::move(b))});
  return SubgroupSpec(std::move(node), projective);
}

SubgroupSpec SubgroupSpec::as_projective(bool flag) const {
  SubgroupSpec out = *this;
  out.projective_ = flag;
  return out;
}

const std::vector<IntMat2>* SubgroupSpec::generated_gens() const {
  if (!node_) return nullptr;
  if (auto* g = std::get_if<GeneratedNode>(&node_->v)) return &g->gens;
  return nullptr;
}

bool SubgroupSpec::contains(const IntMat2& a) const {
  if (!is_unimodular(a)) throw NotUnimodular("membership: det != 1");
  if (!node_) return true;  // default-constructed: full group
  if (const auto* n = std::get_if<NamedNode>(&node_->v)) {
    if (n->family == Family::GammaPow) {
      if (!projective_)
        throw std::invalid_argument("GammaPow membership is projective-only");
      int phi = abelianization_mod6(st_word(a));
      return phi % n->level == 0;
    }
    if (named_raw_member(*n, a)) return true;
    return projective_ && named_raw_member(*n, -a);
  }
  if (const auto* n = std::get_if<CongruenceNode>(&node_->v)) {
    auto raw = [&](const IntMat2& m) {
      return n->pred(reduce_mod(m.a, n->modulus), reduce_mod(m.b, n->modulus),
                     reduce_mod(m.c, n->modulus), reduce_mod(m.d, n->modulus));
    };
    if (raw(a)) return true;
    return projective_ && raw(-a);
  }
  if (const auto* n = std::get_if<GeneratedNode>(&node_->v)) {
    return generated_table(*n, projective_).contains(a);
  }
  if (const auto* n =
          std::get_if<std::pair<SubgroupSpec, Conjugator>>(&node_->v)) {
    // A lies in P^-1 G P iff the pullback P A P^-1 is integral and in G.
    IntMat2 up;
    if (!try_pullback(n->second, a, up)) return false;
    return n->first.as_projective(projective_).contains(up);
  }
  const auto& pair = std::get<std::pair<SubgroupSpec, SubgroupSpec>>(node_->v);
  return pair.first.as_projective(projective_).contains(a) &&
         pair.second.as_projective(projective_).contains(a);
}

std::string SubgroupSpec::str() const {
  if (!node_) return "SL2Z";
  std::ostringstream os;
  if (const auto* n = std::get_if<NamedNode>(&node_->v)) {
    switch (n->family) {
      case Family::Full: os << "SL2Z"; break;
      case Family::Gamma: os << "Gamma(" << n->level << ")"; break;
      case Family::Gamma0: os << "Gamma0(" << n->level << ")"; break;
      case Family::Gamma1: os << "Gamma1(" << n->level << ")"; break;
      case Family::GammaPow: os << "GammaPow(" << n->level << ")"; break;
      case Family::G8412: os << "Gamma1(8;4,1,2)"; break;
      case Family::G161622: os << "Gamma1(16;16,2,2)"; break;
    }
  } else if (const auto* n = std::get_if<CongruenceNode>(&node_->v)) {
    os << n->label;
  } else if (const auto* n = std::get_if<GeneratedNode>(&node_->v)) {
    os << "Generated[";
    for (std::size_t i = 0; i < n->gens.size(); ++i) {
      if (i) os << " | ";
      os << format_intmat2(n->gens[i]);
    }
    os << "]";
  } else if (const auto* n =
                 std::get_if<std::pair<SubgroupSpec, Conjugator>>(&node_->v)) {
    os << "Conj(" << n->first.str() << "; " << format_conjugator(n->second)
       << ")";
  } else {
    const auto& pair =
        std::get<std::pair<SubgroupSpec, SubgroupSpec>>(node_->v);
    os << "Intersect(" << pair.first.str() << ", " << pair.second.str() << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// spec grammar parser

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  SubgroupSpec parse() {
    SubgroupSpec spec = parse_spec();
    ws();
    if (pos_ != s_.size()) fail("trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("group spec: " + why + " at offset " +
                     std::to_string(pos_) + " in '" + s_ + "'");
  }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool try_lit(const std::string& lit) {
    ws();
    if (s_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer() {
    ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  IntMat2 matrix() {
    Int a = integer(), b, c, d;
    expect(',');
    b = integer();
    expect(';');
    c = integer();
    expect(',');
    d = integer();
    return {a, b, c, d};
  }

  SubgroupSpec parse_spec() {
    ws();
    if (try_lit("SL2Z") || try_lit("PSL2Z")) return SubgroupSpec::full();
    if (try_lit("GammaPow")) {
      expect('(');
      long n = integer();
      expect(')');
      return SubgroupSpec::gamma_pow(static_cast<int>(n));
    }
    if (try_lit("Gamma0")) {
      expect('(');
      long m = integer();
      expect(')');
      return SubgroupSpec::gamma0(m);
    }
    if (try_lit("Gamma1")) {
      expect('(');
      long m = integer();
      ws();
      if (pos_ < s_.size() && s_[pos_] == ';') {
        ++pos_;
        long p = integer();
        expect(',');
        long q = integer();
        expect(',');
        long r = integer();
        expect(')');
        if (m == 8 && p == 4 && q == 1 && r == 2)
          return SubgroupSpec::gamma1_8_4_1_2();
        if (m == 16 && p == 16 && q == 2 && r == 2)
          return SubgroupSpec::gamma1_16_16_2_2();
        fail("unsupported Gamma1(m;...) family");
      }
      expect(')');
      return SubgroupSpec::gamma1(m);
    }
    if (try_lit("Gamma")) {
      expect('(');
      long m = integer();
      expect(')');
      return SubgroupSpec::gamma(m);
    }
    if (try_lit("Generated")) {
      expect('[');
      std::vector<IntMat2> gens;
      ws();
      if (pos_ < s_.size() && s_[pos_] != ']') {
        gens.push_back(matrix());
        while (true) {
          ws();
          if (pos_ < s_.size() && s_[pos_] == '|') {
            ++pos_;
            gens.push_back(matrix());
          } else {
            break;
          }
        }
      }
      expect(']');
      return SubgroupSpec::generated(std::move(gens));
    }
    if (try_lit("Conj")) {
      expect('(');
      SubgroupSpec base = parse_spec();
      expect(';');
      ws();
      if (!try_lit("B=")) fail("expected B=");
      IntMat2 b = matrix();
      expect(';');
      ws();
      if (!try_lit("m=")) fail("expected m=");
      Int m = integer();
      expect(')');
      return SubgroupSpec::conjugated(std::move(base), make_conjugator(b, m));
    }
    if (try_lit("Intersect")) {
      expect('(');
      SubgroupSpec a = parse_spec();
      expect(',');
      SubgroupSpec b = parse_spec();
      expect(')');
      return SubgroupSpec::intersection(std::move(a), std::move(b));
    }
    fail("unknown spec");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

SubgroupSpec parse_group(const std::string& text) {
  return SpecParser(text).parse();
}

}  // namespace skmono
