// brauer - diagram semigroups and complexity bounds

#include "brauer/semigroup.hpp"

#include <algorithm>
#include <utility>

namespace brauer {

  ////////////////////////////////////////////////////////////////////////
  // Element stores used by the closure builder
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class DiagramStore {
     public:
      using element_type = Diagram;

      explicit DiagramStore(std::size_t degree) : _degree(degree) {}

      id_type find(Diagram const& d) const {
        auto it = _index.find(d);
        return it == _index.end() ? UNDEFINED : it->second;
      }

      id_type push(Diagram&& d) {
        if (d.degree() != _degree) {
          throw DegreeMismatch("generator of degree "
                               + std::to_string(d.degree())
                               + " in a closure of degree "
                               + std::to_string(_degree));
        }
        auto id = static_cast<id_type>(_elements.size());
        _index.emplace(d, id);
        _elements.push_back(std::move(d));
        return id;
      }

      Diagram const& at(id_type a) const {
        return _elements[a];
      }

      Diagram mul(Diagram const& a, Diagram const& b) const {
        return multiply(a, b);
      }

      bool accept(Diagram const& d) const {
        return _allowed == nullptr || _allowed->count(d) != 0;
      }

      void restrict_to(std::unordered_map<Diagram, id_type, DiagramHash> const* allowed) {
        _allowed = allowed;
      }

      std::vector<Diagram>                              _elements;
      std::unordered_map<Diagram, id_type, DiagramHash> _index;

     private:
      std::size_t                                              _degree;
      std::unordered_map<Diagram, id_type, DiagramHash> const* _allowed = nullptr;
    };

    class ParentStore {
     public:
      using element_type = id_type;

      explicit ParentStore(Semigroup const& parent)
          : _index(parent.size(), UNDEFINED), _parent(parent) {}

      id_type find(id_type p) const {
        return _index[p];
      }

      id_type push(id_type&& p) {
        auto id   = static_cast<id_type>(_elements.size());
        _index[p] = id;
        _elements.push_back(p);
        return id;
      }

      id_type const& at(id_type a) const {
        return _elements[a];
      }

      id_type mul(id_type a, id_type b) const {
        return _parent.product(a, b);
      }

      bool accept(id_type p) const {
        return _allowed.empty() || _allowed[p];
      }

      void restrict_to(std::vector<bool> allowed) {
        _allowed = std::move(allowed);
      }

      std::vector<id_type> _elements;
      std::vector<id_type> _index;

     private:
      Semigroup const&  _parent;
      std::vector<bool> _allowed;
    };

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ClosureBuilder
  ////////////////////////////////////////////////////////////////////////

  // Breadth-first enumeration of a finitely generated semigroup. Every new
  // element is recorded as prefix * generator, where prefix was discovered
  // earlier. Generators can be added after a partial or complete run; the
  // missing columns of the right Cayley graph are then filled in before the
  // search continues.
  template <typename Store>
  class ClosureBuilder {
   public:
    using element_type = typename Store::element_type;

    ClosureBuilder(Store& store, std::size_t budget)
        : _store(store), _budget(budget) {}

    std::size_t size() const noexcept {
      return _prefix.size();
    }

    bool contains(element_type const& x) const {
      return _store.find(x) != UNDEFINED;
    }

    void add_generators(std::vector<element_type> const& gens) {
      std::size_t const old_ngens = _gens.size();
      std::size_t const old_done  = _done;
      for (auto const& g : gens) {
        std::size_t k  = _gens.size();
        id_type     id = _store.find(g);
        if (id == UNDEFINED) {
          id = add(element_type(g), UNDEFINED, k);
        }
        _gens.push_back(id);
        _cols.emplace_back();
      }
      for (std::size_t k = old_ngens; k < _gens.size(); ++k) {
        _cols[k].resize(old_done, UNDEFINED);
        for (std::size_t p = 0; p < old_done; ++p) {
          _cols[k][p] = step(static_cast<id_type>(p), k);
        }
      }
      run();
    }

    void run() {
      while (_done < size()) {
        auto p = static_cast<id_type>(_done);
        for (std::size_t k = 0; k < _gens.size(); ++k) {
          _cols[k].push_back(step(p, k));
        }
        ++_done;
      }
    }

    void finish(Semigroup& s) {
      std::size_t const N = size();
      std::size_t const G = _gens.size();
      s._gens             = _gens;
      s._prefix           = std::move(_prefix);
      s._last             = std::move(_last);
      s._right.assign(N * G, UNDEFINED);
      for (std::size_t k = 0; k < G; ++k) {
        for (std::size_t a = 0; a < N; ++a) {
          s._right[a * G + k] = _cols[k][a];
        }
      }
      _cols.clear();
      s.finalise();
    }

   private:
    id_type step(id_type p, std::size_t k) {
      element_type x  = _store.mul(_store.at(p), _store.at(_gens[k]));
      id_type      id = _store.find(x);
      if (id == UNDEFINED) {
        id = add(std::move(x), p, k);
      }
      return id;
    }

    id_type add(element_type&& x, id_type prefix, std::size_t last) {
      if (!_store.accept(x)) {
        throw NotASubsemigroup("the closure contains an element outside the "
                               "given set");
      }
      if (size() >= _budget) {
        throw BudgetExceeded("closure exceeds the budget of "
                             + std::to_string(_budget) + " elements");
      }
      id_type id = _store.push(std::move(x));
      _prefix.push_back(prefix);
      _last.push_back(static_cast<id_type>(last));
      return id;
    }

    Store&                            _store;
    std::size_t                       _budget;
    std::size_t                       _done = 0;
    std::vector<id_type>              _gens;
    std::vector<std::vector<id_type>> _cols;
    std::vector<id_type>              _prefix;
    std::vector<id_type>              _last;
  };

  ////////////////////////////////////////////////////////////////////////
  // Semigroup
  ////////////////////////////////////////////////////////////////////////

  void Semigroup::finalise() {
    std::size_t const N = _prefix.size();
    std::size_t const G = _gens.size();

    _word_offset.assign(N + 1, 0);
    std::vector<std::size_t> length(N, 0);
    for (std::size_t a = 0; a < N; ++a) {
      length[a] = _prefix[a] == UNDEFINED ? 1 : length[_prefix[a]] + 1;
      _word_offset[a + 1] = _word_offset[a] + length[a];
    }
    _word_letters.resize(_word_offset[N]);
    for (std::size_t a = 0; a < N; ++a) {
      std::size_t end = _word_offset[a + 1];
      if (_prefix[a] != UNDEFINED) {
        std::size_t p = _prefix[a];
        std::copy(_word_letters.begin() + _word_offset[p],
                  _word_letters.begin() + _word_offset[p + 1],
                  _word_letters.begin() + _word_offset[a]);
      }
      _word_letters[end - 1] = static_cast<std::uint16_t>(_last[a]);
    }

    // g * (p * h) = (g * p) * h, and prefixes precede their extensions.
    _left.assign(N * G, UNDEFINED);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t g = 0; g < G; ++g) {
        id_type value;
        if (_prefix[a] == UNDEFINED) {
          value = right(_gens[g], _last[a]);
        } else {
          value = right(left(_prefix[a], g), _last[a]);
        }
        _left[a * G + g] = value;
      }
    }

    _identity.reset();
    for (std::size_t e = 0; e < N; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < G && ok; ++g) {
        ok = right(e, g) == _gens[g] && left(e, g) == _gens[g];
      }
      if (ok) {
        _identity = static_cast<id_type>(e);
        break;
      }
    }
  }

  id_type Semigroup::product(id_type a, id_type b) const {
    std::size_t const G = _gens.size();
    for (std::size_t i = _word_offset[b]; i < _word_offset[b + 1]; ++i) {
      a = _right[static_cast<std::size_t>(a) * G + _word_letters[i]];
    }
    return a;
  }

  std::vector<std::size_t> Semigroup::factorisation(id_type a) const {
    return std::vector<std::size_t>(_word_letters.begin() + _word_offset[a],
                                    _word_letters.begin() + _word_offset[a + 1]);
  }

  SemigroupPtr Semigroup::closure(std::vector<Diagram> const& gens,
                                  std::size_t                 budget) {
    if (gens.empty()) {
      throw BadIndex("a closure needs at least one generator");
    }
    DiagramStore                 store(gens.front().degree());
    ClosureBuilder<DiagramStore> builder(store, budget);
    builder.add_generators(gens);
    auto s   = std::shared_ptr<Semigroup>(new Semigroup());
    s->_kind = Kind::Diagrams;
    builder.finish(*s);
    s->_elements = std::move(store._elements);
    s->_index    = std::move(store._index);
    return s;
  }

  SemigroupPtr Semigroup::from_elements(std::vector<Diagram> const& elements,
                                        std::vector<Diagram> const& pool) {
    if (elements.empty()) {
      throw BadIndex("a semigroup needs at least one element");
    }
    std::unordered_map<Diagram, id_type, DiagramHash> allowed;
    for (auto const& d : elements) {
      allowed.emplace(d, 0);
    }
    DiagramStore store(elements.front().degree());
    store.restrict_to(&allowed);
    ClosureBuilder<DiagramStore> builder(store, elements.size() + 1);
    for (auto const* list : {&pool, &elements}) {
      for (auto const& d : *list) {
        if (allowed.count(d) != 0 && !builder.contains(d)) {
          builder.add_generators({d});
        }
      }
    }
    auto s   = std::shared_ptr<Semigroup>(new Semigroup());
    s->_kind = Kind::Diagrams;
    builder.finish(*s);
    s->_elements = std::move(store._elements);
    s->_index    = std::move(store._index);
    return s;
  }

  SemigroupPtr Semigroup::generated(SemigroupPtr                parent,
                                    std::vector<id_type> const& seeds,
                                    std::size_t                 budget) {
    if (seeds.empty()) {
      throw BadIndex("a subsemigroup needs at least one generator");
    }
    ParentStore                 store(*parent);
    ClosureBuilder<ParentStore> builder(store, budget);
    builder.add_generators(seeds);
    auto s   = std::shared_ptr<Semigroup>(new Semigroup());
    s->_kind = Kind::Subsemigroup;
    builder.finish(*s);
    s->_parent      = std::move(parent);
    s->_parent_ids  = std::move(store._elements);
    s->_from_parent = std::move(store._index);
    return s;
  }

  SemigroupPtr Semigroup::induced(SemigroupPtr                parent,
                                  std::vector<id_type> const& ids) {
    if (ids.empty()) {
      throw BadIndex("a subsemigroup needs at least one element");
    }
    std::vector<bool> allowed(parent->size(), false);
    for (auto p : ids) {
      allowed[p] = true;
    }
    ParentStore store(*parent);
    store.restrict_to(allowed);
    ClosureBuilder<ParentStore> builder(store, ids.size() + 1);
    for (auto p : ids) {
      if (!builder.contains(p)) {
        builder.add_generators({p});
      }
    }
    auto s   = std::shared_ptr<Semigroup>(new Semigroup());
    s->_kind = Kind::Subsemigroup;
    builder.finish(*s);
    s->_parent      = std::move(parent);
    s->_parent_ids  = std::move(store._elements);
    s->_from_parent = std::move(store._index);
    return s;
  }

  // Every element is its own generator, so the right Cayley graph is the
  // multiplication table itself.
  SemigroupPtr Semigroup::from_table(std::vector<id_type> const&     table,
                                     std::vector<std::string> const& names) {
    std::size_t const N = names.size();
    if (N == 0 || N > 0xFFFF || table.size() != N * N) {
      throw BadIndex("multiplication table does not match the element count");
    }
    for (auto x : table) {
      if (x >= N) {
        throw BadIndex("multiplication table entry out of range");
      }
    }
    auto s   = std::shared_ptr<Semigroup>(new Semigroup());
    s->_kind = Kind::Table;
    s->_gens.resize(N);
    s->_prefix.assign(N, UNDEFINED);
    s->_last.resize(N);
    for (std::size_t a = 0; a < N; ++a) {
      s->_gens[a] = static_cast<id_type>(a);
      s->_last[a] = static_cast<id_type>(a);
    }
    s->_right = table;
    s->_names = names;
    s->finalise();
    return s;
  }

  bool Semigroup::has_diagrams() const noexcept {
    switch (_kind) {
      case Kind::Diagrams:
        return true;
      case Kind::Subsemigroup:
        return _parent->has_diagrams();
      default:
        return false;
    }
  }

  std::size_t Semigroup::degree() const noexcept {
    if (_kind == Kind::Diagrams) {
      return _elements.front().degree();
    } else if (_kind == Kind::Subsemigroup) {
      return _parent->degree();
    }
    return 0;
  }

  Diagram const& Semigroup::diagram(id_type a) const {
    if (_kind == Kind::Diagrams) {
      return _elements[a];
    } else if (_kind == Kind::Subsemigroup) {
      return _parent->diagram(_parent_ids[a]);
    }
    throw BadIndex("abstract semigroup elements are not diagrams");
  }

  std::optional<id_type> Semigroup::find(Diagram const& d) const {
    if (_kind == Kind::Diagrams) {
      auto it = _index.find(d);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    } else if (_kind == Kind::Subsemigroup) {
      auto p = _parent->find(d);
      if (!p || _from_parent[*p] == UNDEFINED) {
        return std::nullopt;
      }
      return _from_parent[*p];
    }
    return std::nullopt;
  }

  std::vector<Diagram> Semigroup::diagrams() const {
    std::vector<Diagram> out;
    out.reserve(size());
    for (id_type a = 0; a < size(); ++a) {
      out.push_back(diagram(a));
    }
    return out;
  }

  std::string Semigroup::element_name(id_type a) const {
    switch (_kind) {
      case Kind::Diagrams:
        return encode(_elements[a]);
      case Kind::Subsemigroup:
        return _parent->element_name(_parent_ids[a]);
      default:
        return _names[a];
    }
  }

  id_type Semigroup::from_parent(id_type p) const {
    if (_kind != Kind::Subsemigroup || p >= _from_parent.size()) {
      return UNDEFINED;
    }
    return _from_parent[p];
  }

  ////////////////////////////////////////////////////////////////////////
  // Helpers
  ////////////////////////////////////////////////////////////////////////

  std::vector<id_type> closure_ids(Semigroup const&            s,
                                   std::vector<id_type> const& seeds) {
    std::vector<bool>    seen(s.size(), false);
    std::vector<id_type> out;
    for (auto x : seeds) {
      if (!seen[x]) {
        seen[x] = true;
        out.push_back(x);
      }
    }
    std::vector<id_type> const gens = out;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto g : gens) {
        id_type y = s.product(out[i], g);
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<id_type> inclusion_map(Semigroup const& s, Semigroup const& t) {
    std::vector<id_type> out(s.size(), UNDEFINED);
    for (id_type a = 0; a < s.size(); ++a) {
      if (auto b = t.find(s.diagram(a))) {
        out[a] = *b;
      }
    }
    return out;
  }

  Diagram pad_embedding(Diagram const& a, std::size_t target_n) {
    std::size_t const n = a.degree();
    if (target_n != n + 2) {
      throw BadDegree("padding a diagram of degree " + std::to_string(n)
                      + " needs target degree " + std::to_string(n + 2));
    }
    std::vector<std::uint32_t> labels(2 * target_n);
    auto const                 fresh = static_cast<std::uint32_t>(a.num_blocks());
    for (std::size_t i = 0; i < n; ++i) {
      labels[i]            = a.label(i);
      labels[target_n + i] = a.label(n + i);
    }
    labels[n]                = fresh;
    labels[n + 1]            = fresh;
    labels[target_n + n]     = fresh + 1;
    labels[target_n + n + 1] = fresh + 1;
    return Diagram::from_labels(target_n, labels);
  }

}  // namespace brauer
