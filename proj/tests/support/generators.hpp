#pragma once
// Seeded random generators for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phytobase/conservation.hpp"
#include "phytobase/pql.hpp"
#include "phytobase/record.hpp"

namespace testgen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    template <typename T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))]; }
    template <typename T>
    std::vector<T> subset(const std::vector<T>& v, int max_n) {
        std::vector<T> out;
        int n = range(0, max_n);
        for (int i = 0; i < n; ++i) {
            const auto& x = pick(v);
            bool seen = false;
            for (const auto& y : out) seen = seen || y == x;
            if (!seen) out.push_back(x);
        }
        return out;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Valid records with deliberately small vocabularies so predicates hit.
phytobase::PlantRecord random_record(Gen& g, const std::string& id);
std::vector<phytobase::PlantRecord> random_corpus(Gen& g, int max_records);

phytobase::pql::Expr random_expr(Gen& g, int depth);
phytobase::pql::Query random_query(Gen& g, int depth);

// Nonnegative shares, not all zero, printed-survey style.
phytobase::OpinionDistribution random_opinions(Gen& g);

// Strings with quotes, backslashes, spaces and UTF-8.
std::string awkward_string(Gen& g);

}  // namespace testgen
