// Copyright 2026 The Dislo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cmath>

#include "search_space.h"

namespace dislo {

namespace {

constexpr size_t kMaxHalf = 8;

using AtomList = std::vector<uint16_t>;

template <size_t H>
struct Entry {
    uint64_t hash;
    std::array<uint16_t, H> atoms;

    bool operator<(const Entry &other) const {
        if (hash != other.hash) {
            return hash < other.hash;
        }
        return atoms < other.atoms;
    }
};

template <size_t H>
class Table {
   public:
    void build(std::vector<Entry<H>> entries) {
        entries_ = std::move(entries);
        std::sort(entries_.begin(), entries_.end());
        size_t count = entries_.size();
        bits_ = 0;
        while (bits_ < 24 && (size_t{4} << bits_) <= count) {
            bits_++;
        }
        directory_.assign((size_t{1} << bits_) + 1, 0);
        size_t e = 0;
        for (size_t bucket = 0; bucket < (size_t{1} << bits_); bucket++) {
            directory_[bucket] = static_cast<uint32_t>(e);
            while (e < count && bucket_of(entries_[e].hash) == bucket) {
                e++;
            }
        }
        directory_.back() = static_cast<uint32_t>(count);
    }

    size_t bytes() const {
        return entries_.capacity() * sizeof(Entry<H>) + directory_.capacity() * sizeof(uint32_t);
    }

    std::span<const Entry<H>> matches(uint64_t hash) const {
        size_t bucket = bucket_of(hash);
        auto lo = entries_.begin() + directory_[bucket];
        auto hi = entries_.begin() + directory_[bucket + 1];
        auto first = std::lower_bound(lo, hi, hash, [](const Entry<H> &e, uint64_t h) {
            return e.hash < h;
        });
        auto last = first;
        while (last != hi && last->hash == hash) {
            ++last;
        }
        return {first, last};
    }

   private:
    std::vector<Entry<H>> entries_;
    std::vector<uint32_t> directory_;
    size_t bits_ = 0;

    size_t bucket_of(uint64_t hash) const {
        return bits_ == 0 ? 0 : static_cast<size_t>(hash >> (64 - bits_));
    }
};

struct Hit {
    AtomList atoms;
};

class MitmSearch {
   public:
    MitmSearch(const detail::AtomTable &atoms, size_t n, const SearchOptions &options)
        : atoms_(atoms), n_(n), options_(options) {
    }

    std::optional<AtomList> search_weight(size_t w, SearchStats &stats) {
        size_t h1 = (w + 1) / 2;
        size_t h2 = w / 2;
        switch (h2) {
            case 0:
                return search_level<0>(h1, stats);
            case 1:
                return search_level<1>(h1, stats);
            case 2:
                return search_level<2>(h1, stats);
            case 3:
                return search_level<3>(h1, stats);
            case 4:
                return search_level<4>(h1, stats);
            case 5:
                return search_level<5>(h1, stats);
            case 6:
                return search_level<6>(h1, stats);
            case 7:
                return search_level<7>(h1, stats);
            case 8:
                return search_level<8>(h1, stats);
            default:
                throw ResourceError(
                    "weight " + std::to_string(w) + " is beyond the meet-in-the-middle limit of " +
                    std::to_string(2 * kMaxHalf + 1));
        }
    }

   private:
    const detail::AtomTable &atoms_;
    size_t n_;
    const SearchOptions &options_;

    size_t words() const {
        return atoms_.words();
    }

    // Calls fn(atoms, hash) for every increasing sequence of h atoms that can
    // be the tail of a zero-syndrome error preceded by at least one more atom.
    template <typename Fn>
    void enumerate_tails(size_t h, Fn &&fn) const {
        std::array<uint16_t, kMaxHalf> seq{};
        std::vector<uint64_t> syn((h + 1) * words(), 0);
        tail_step(h, atoms_.num_atoms(), seq, syn, 0, fn);
    }

    template <typename Fn>
    void tail_step(
        size_t remaining,
        size_t upper,
        std::array<uint16_t, kMaxHalf> &seq,
        std::vector<uint64_t> &syn,
        uint64_t hash,
        Fn &fn) const {
        if (remaining == 0) {
            fn(seq, hash);
            return;
        }
        const auto &closure = atoms_.closure();
        std::span<const uint64_t> cur(syn.data() + remaining * words(), words());
        std::span<uint64_t> next(syn.data() + (remaining - 1) * words(), words());
        for (size_t p = upper; p-- > 0;) {
            if (detail::intersects(closure.open_after.row(atoms_.qubit(p)), cur)) {
                break;
            }
            size_t below = atoms_.prev_end(p);
            if (below == 0) {
                continue;
            }
            std::copy(cur.begin(), cur.end(), next.begin());
            detail::xor_into(next, atoms_.syndrome(p));
            if (detail::intersects(closure.open_after.row(atoms_.qubit(below - 1)), next)) {
                continue;
            }
            seq[remaining - 1] = static_cast<uint16_t>(p);
            tail_step(remaining - 1, below, seq, syn, hash ^ atoms_.hash(p), fn);
        }
    }

    struct HeadState {
        std::array<uint16_t, kMaxHalf> seq{};
        std::vector<uint64_t> syn;
        uint64_t visited = 0;
    };

    // Calls fn(state, hash, lbits) for every increasing h-atom sequence
    // starting at `first` that can be the head of a zero-syndrome error
    // followed by `tail` more atoms. Stops when fn returns true.
    template <typename Fn>
    bool enumerate_heads(size_t h, size_t tail, size_t first, HeadState &state, Fn &&fn) const {
        state.syn.assign((h + 1) * words(), 0);
        return head_step(0, h, tail, first, first + 1, state, 0, 0, fn);
    }

    template <typename Fn>
    bool head_step(
        size_t depth,
        size_t h,
        size_t tail,
        size_t lower,
        size_t upper,
        HeadState &state,
        uint64_t hash,
        uint64_t lbits,
        Fn &fn) const {
        if (depth == h) {
            state.visited++;
            return fn(state, hash, lbits);
        }
        const auto &closure = atoms_.closure();
        std::span<const uint64_t> cur(state.syn.data() + depth * words(), words());
        std::span<uint64_t> next(state.syn.data() + (depth + 1) * words(), words());
        bool last_atom = depth + 1 == h && tail == 0;
        for (size_t p = lower; p < upper; p++) {
            if (detail::intersects(closure.closed_before.row(atoms_.qubit(p)), cur)) {
                break;
            }
            std::copy(cur.begin(), cur.end(), next.begin());
            detail::xor_into(next, atoms_.syndrome(p));
            size_t after = atoms_.next_start(p);
            size_t q_after = last_atom || after >= atoms_.num_atoms() ? n_ : atoms_.qubit(after);
            if (detail::intersects(closure.closed_before.row(q_after), next)) {
                continue;
            }
            state.seq[depth] = static_cast<uint16_t>(p);
            if (head_step(
                    depth + 1,
                    h,
                    tail,
                    after,
                    atoms_.num_atoms(),
                    state,
                    hash ^ atoms_.hash(p),
                    lbits ^ atoms_.lbits(p),
                    fn)) {
                return true;
            }
        }
        return false;
    }

    template <size_t H>
    size_t count_tails(size_t limit, SearchStats &stats) const {
        size_t count = 0;
        struct Stop {};
        try {
            enumerate_tails(H, [&](const std::array<uint16_t, kMaxHalf> &, uint64_t) {
                if (++count > limit) {
                    throw Stop{};
                }
            });
        } catch (const Stop &) {
        }
        stats.candidates += std::min(count, limit);
        return count;
    }

    template <size_t H>
    std::optional<AtomList> search_level(size_t h1, SearchStats &stats) {
        size_t entry_bytes = sizeof(Entry<H>);
        size_t budget = std::max<size_t>(options_.memory_bytes, 1);
        size_t limit = options_.max_shards * (budget / entry_bytes);
        size_t count = count_tails<H>(limit, stats);
        if (count > limit || (count > 0 && budget < entry_bytes)) {
            throw ResourceError(
                "meet-in-the-middle table for " + std::to_string(H) + "-atom halves needs more than " +
                std::to_string(options_.max_shards) + " shards of " + std::to_string(budget >> 20) +
                " MiB; raise the memory budget or lower the cap");
        }
        size_t shards = std::max<size_t>(1, (count * entry_bytes + budget - 1) / budget);
        stats.shards = std::max(stats.shards, shards);

        std::optional<AtomList> best;
        for (size_t shard = 0; shard < shards; shard++) {
            Table<H> table;
            {
                std::vector<Entry<H>> entries;
                entries.reserve(shards == 1 ? count : count / shards + count / 16 + 16);
                enumerate_tails(H, [&](const std::array<uint16_t, kMaxHalf> &seq, uint64_t hash) {
                    if (hash % shards == shard) {
                        Entry<H> e;
                        e.hash = hash;
                        std::copy(seq.begin(), seq.begin() + H, e.atoms.begin());
                        entries.push_back(e);
                    }
                });
                if (shards > 1) {
                    stats.candidates += count;
                }
                table.build(std::move(entries));
            }
            stats.table_bytes = std::max(stats.table_bytes, table.bytes());

            size_t num_tasks = best ? static_cast<size_t>((*best)[0]) + 1 : atoms_.num_atoms();
            std::vector<std::optional<AtomList>> hits(num_tasks);
            std::atomic<uint64_t> visited{0};
            size_t first = detail::first_hit(num_tasks, options_.threads, [&](size_t a0) {
                HeadState state;
                std::vector<uint64_t> combined(words());
                bool found = enumerate_heads(h1, H, a0, state, [&](HeadState &s, uint64_t hash, uint64_t lbits) {
                    if (hash % shards != shard) {
                        return false;
                    }
                    std::span<const uint64_t> head_syn(s.syn.data() + h1 * words(), words());
                    size_t after = atoms_.next_start(s.seq[h1 - 1]);
                    for (const auto &e : table.matches(hash)) {
                        if (H > 0 && e.atoms[0] < after) {
                            continue;
                        }
                        std::copy(head_syn.begin(), head_syn.end(), combined.begin());
                        uint64_t lb = lbits;
                        for (size_t i = 0; i < H; i++) {
                            detail::xor_into(combined, atoms_.syndrome(e.atoms[i]));
                            lb ^= atoms_.lbits(e.atoms[i]);
                        }
                        if (!detail::all_zero(combined) || (lb & atoms_.mask()) == 0) {
                            continue;
                        }
                        AtomList full(s.seq.begin(), s.seq.begin() + h1);
                        full.insert(full.end(), e.atoms.begin(), e.atoms.end());
                        hits[a0] = std::move(full);
                        return true;
                    }
                    return false;
                });
                visited += state.visited;
                return found;
            });
            stats.candidates += visited.load();
            if (first < num_tasks && (!best || *hits[first] < *best)) {
                best = hits[first];
            }
        }
        return best;
    }
};

}  // namespace

DistanceReport mitm_search(
    const StabilizerCode &code,
    ErrorModel model,
    size_t cap,
    const SearchOptions &options,
    std::optional<size_t> logical) {
    if (cap < 1) {
        throw std::invalid_argument("cap must be at least 1");
    }
    auto start = std::chrono::steady_clock::now();
    CodeChecker checker(code);
    if (checker.k() == 0) {
        throw InvalidCodeError("code encodes no logical qubits, so its distance is undefined");
    }
    if (logical && *logical >= checker.k()) {
        throw std::out_of_range(
            "logical index " + std::to_string(*logical) + " out of range (k = " + std::to_string(checker.k()) + ")");
    }
    uint64_t mask = logical ? detail::logical_mask(*logical) : detail::all_logicals_mask(checker.k());
    detail::AtomTable atoms(code, checker, model, mask);
    MitmSearch search(atoms, code.n, options);

    DistanceReport report;
    report.model = model;
    report.engine = Engine::kMitm;
    report.cap = cap;
    for (size_t w = 1; w <= cap; w++) {
        auto hit = search.search_weight(w, report.stats);
        if (!hit) {
            continue;
        }
        PauliOperator e = atoms.to_operator(*hit);
        ErrorClass cls = checker.classify(e);
        if (weight(e, model) != w || cls.kind != ErrorClassKind::kLogical) {
            throw std::logic_error("meet-in-the-middle join produced an invalid witness " + format_pauli(e));
        }
        report.d = w;
        report.witness = std::move(e);
        break;
    }
    report.stats.seconds = detail::seconds_since(start);
    return report;
}

DistanceReport mitm_distance(const StabilizerCode &code, ErrorModel model, size_t cap, const SearchOptions &options) {
    return mitm_search(code, model, cap, options, std::nullopt);
}

}  // namespace dislo
