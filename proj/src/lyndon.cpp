#include "facealg/lyndon.hpp"

#include <functional>
#include <set>

namespace facealg {

  bool is_lyndon(Word const& w) {
    auto const& a = w.parts();
    std::size_t n = a.size();
    if (n == 0) {
      return false;
    }
    for (std::size_t r = 1; r < n; ++r) {
      // Compare w with its rotation starting at r.
      std::size_t k = 0;
      while (k < n && a[k] == a[(r + k) % n]) {
        ++k;
      }
      if (k == n || a[k] > a[(r + k) % n]) {
        return false;
      }
    }
    return true;
  }

  std::vector<Word> duval_factorization(Word const& w) {
    auto const&       a = w.parts();
    std::size_t const n = a.size();
    std::vector<Word> out;
    std::size_t       i = 0;
    while (i < n) {
      std::size_t j = i + 1, k = i;
      while (j < n && a[k] <= a[j]) {
        k = a[k] < a[j] ? i : k + 1;
        ++j;
      }
      while (i <= k) {
        out.emplace_back(std::vector<int>(a.begin() + static_cast<std::ptrdiff_t>(i),
                                          a.begin() + static_cast<std::ptrdiff_t>(i + j - k)));
        i += j - k;
      }
    }
    return out;
  }

  Partition lyndon_type(Composition const& alpha) {
    std::vector<int> sizes;
    for (auto const& factor : duval_factorization(alpha)) {
      sizes.push_back(factor.size());
    }
    return Partition::from_unsorted(std::move(sizes));
  }

  std::vector<Word> lyndon_words_up_to(int max_size) {
    std::vector<Word> out;
    for (int s = 1; s <= max_size; ++s) {
      for (auto const& w : compositions_of(s)) {
        if (is_lyndon(w)) {
          out.push_back(w);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bead order
  ////////////////////////////////////////////////////////////////////////

  std::strong_ordering compare_beads(int a, int b) {
    return a <=> b;
  }

  std::strong_ordering compare_beads(Partition const& a, Partition const& b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    return b <=> a;
  }

  std::strong_ordering compare_beads(PartitionTuple const& a,
                                     PartitionTuple const& b) {
    std::size_t const m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (auto c = compare_beads(a[i], b[i]); c != 0) {
        return c;
      }
    }
    return a.size() <=> b.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Necklace maps
  ////////////////////////////////////////////////////////////////////////

  std::pair<Word, int> f_map(LetterNecklace const& eta) {
    std::size_t const d = eta.period();
    Word              w(std::vector<int>(eta.beads().begin(),
                                         eta.beads().begin() + static_cast<std::ptrdiff_t>(d)));
    return {std::move(w), static_cast<int>(eta.size() / d)};
  }

  namespace {
    void append_evaluation(Partition const&  nu,
                           std::vector<int>& z,
                           std::vector<int>& x) {
      z.push_back(nu.length());
      x.insert(x.end(), nu.begin(), nu.end());
    }
  }  // namespace

  Evaluation eval(PartitionNecklace const& eta) {
    std::vector<int> z, x;
    for (auto const& nu : eta.beads()) {
      append_evaluation(nu, z, x);
    }
    return {Partition::from_unsorted(z), Partition::from_unsorted(x)};
  }

  Evaluation eval(TupleNecklace const& tau) {
    std::vector<int> z, x;
    for (auto const& tuple : tau.beads()) {
      for (auto const& nu : tuple) {
        append_evaluation(nu, z, x);
      }
    }
    return {Partition::from_unsorted(z), Partition::from_unsorted(x)};
  }

  LetterNecklace z_necklace(PartitionNecklace const& eta) {
    std::vector<int> letters;
    for (auto const& nu : eta.beads()) {
      letters.push_back(nu.length());
    }
    return LetterNecklace(std::move(letters));
  }

  TupleNecklace psi(PartitionNecklace const& eta) {
    if (!eta.is_primitive()) {
      throw std::invalid_argument("psi: necklace is not primitive");
    }
    auto const [w, m] = f_map(z_necklace(eta));
    auto const&       beads = eta.beads();
    std::size_t const k     = beads.size();
    std::size_t const len   = static_cast<std::size_t>(w.length());
    for (std::size_t j = 0; j < k; ++j) {
      bool match = true;
      for (std::size_t t = 0; t < k && match; ++t) {
        match = beads[(j + t) % k].length() == w[t % len];
      }
      if (!match) {
        continue;
      }
      std::vector<PartitionTuple> tuples;
      for (std::size_t q = 0; q < static_cast<std::size_t>(m); ++q) {
        PartitionTuple tuple;
        for (std::size_t t = 0; t < len; ++t) {
          tuple.push_back(beads[(j + q * len + t) % k]);
        }
        tuples.push_back(std::move(tuple));
      }
      return TupleNecklace(std::move(tuples));
    }
    throw std::logic_error("psi: no rotation reads the Lyndon power");
  }

  PartitionNecklace theta(TupleNecklace const& tau) {
    if (!tau.is_primitive()) {
      throw std::invalid_argument("theta: necklace is not primitive");
    }
    std::vector<int> lengths;
    for (auto const& nu : tau.beads().front()) {
      lengths.push_back(nu.length());
    }
    Word const w(lengths);
    if (!is_lyndon(w)) {
      throw std::invalid_argument("theta: tuple lengths are not a Lyndon word");
    }
    std::vector<Partition> flat;
    for (auto const& tuple : tau.beads()) {
      if (tuple.size() != lengths.size()) {
        throw std::invalid_argument("theta: tuples of different lengths");
      }
      for (std::size_t t = 0; t < tuple.size(); ++t) {
        if (tuple[t].length() != lengths[t]) {
          throw std::invalid_argument("theta: tuples spell different words");
        }
        flat.push_back(tuple[t]);
      }
    }
    return PartitionNecklace(std::move(flat));
  }

  std::vector<LetterNecklace> primitive_necklaces_with_content(Partition const& content) {
    std::vector<int> word;
    for (int i = 0; i < content.length(); ++i) {
      word.insert(word.end(), content[i], i + 1);
    }
    std::set<LetterNecklace> seen;
    do {
      LetterNecklace eta(word);
      if (eta.is_primitive()) {
        seen.insert(std::move(eta));
      }
    } while (std::next_permutation(word.begin(), word.end()));
    return {seen.begin(), seen.end()};
  }

  std::vector<PartitionNecklace> primitive_partition_necklaces(int max_total) {
    std::vector<std::vector<Partition>> by_size(max_total + 1);
    for (int m = 1; m <= max_total; ++m) {
      by_size[m] = partitions_of(m);
    }
    std::set<PartitionNecklace> seen;
    std::vector<Partition>      word;
    std::function<void(int)>    extend = [&](int room) {
      if (!word.empty()) {
        PartitionNecklace eta(word);
        if (eta.is_primitive()) {
          seen.insert(std::move(eta));
        }
      }
      for (int m = 1; m <= room; ++m) {
        for (auto const& nu : by_size[m]) {
          word.push_back(nu);
          extend(room - m);
          word.pop_back();
        }
      }
    };
    extend(max_total);
    return {seen.begin(), seen.end()};
  }

}  // namespace facealg
