#pragma once

#include "bandcol/coloring.hpp"
#include "bandcol/deadline.hpp"
#include "bandcol/instance.hpp"
#include "bandcol/rng.hpp"
#include "bandcol/tabu_search.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bandcol {

using MemberId = std::uint64_t;

struct Member {
    Coloring coloring;
    std::int64_t f = 0;
    MemberId id = 0;
};

/// Elite pool of colorings with cached objective values. Every member gets a
/// fresh identity when it enters, so pairs can refer to members stably.
class Population {
public:
    Population() = default;

    const std::vector<Member>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    const Member& operator[](std::size_t i) const noexcept { return members_[i]; }

    MemberId add(Coloring coloring, std::int64_t f);
    /// Replaces the member at `index`; returns the new member's id.
    MemberId replace(std::size_t index, Coloring coloring, std::int64_t f);

    /// Index of the largest f; the first one on ties.
    std::size_t worst_index() const;
    /// Index of the smallest f; the first one on ties.
    std::size_t best_index() const;
    double mean_f() const;
    std::optional<std::size_t> find(MemberId id) const;

private:
    std::vector<Member> members_;
    MemberId next_id_ = 1;
};

/// Unordered pairs of member ids that have not been relinked yet.
class PairSet {
public:
    static PairSet all_pairs(const Population& pop);

    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    bool contains(MemberId a, MemberId b) const;
    const std::vector<std::pair<MemberId, MemberId>>& pairs() const noexcept { return pairs_; }

    /// No-op when the pair is already present or a == b.
    void add(MemberId a, MemberId b);
    void remove_member(MemberId id);

    /// Uniformly chosen pair, removed from the set. Throws std::logic_error when empty.
    std::pair<MemberId, MemberId> pick(Rng& rng);

private:
    std::vector<std::pair<MemberId, MemberId>> pairs_;
};

struct InitStats {
    std::int64_t ts_calls = 0;
    std::int64_t ts_iterations = 0;
    bool legal_found = false;
};

/// Draws 3p uniformly random k-colorings, improves each with the local
/// search and keeps the p best (stable on ties). Generation stops early when
/// a candidate reaches f = 0 or the deadline expires; the population then
/// holds the best of the candidates produced so far.
Population init_population(const BcpInstance& inst, int k, int p, const TsParams& ts,
                           Rng& construction_rng, Rng& search_rng, InitStats* stats = nullptr,
                           const Deadline* deadline = nullptr);

/// Diversity-gated replacement of the worst member.
///
/// Accepted iff f < f(worst) and the candidate differs from every member in
/// at least 0.1 * n positions. On acceptance the worst member's pairs are
/// dropped and the candidate is paired with every other member.
bool try_insert(Population& pop, PairSet& pairs, const Coloring& candidate, std::int64_t f);

/// Fresh population whose worst member is replaced by `best`.
Population restart(const BcpInstance& inst, int k, int p, const TsParams& ts, const Coloring& best,
                   std::int64_t best_f, Rng& construction_rng, Rng& search_rng,
                   InitStats* stats = nullptr, const Deadline* deadline = nullptr);

} // namespace bandcol
