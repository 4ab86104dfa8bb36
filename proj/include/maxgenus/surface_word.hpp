#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mg {

// One oriented side of a polygon. `sym` indexes into the word's name table,
// `exp` is +1 or -1.
struct Letter {
    int sym = 0;
    int exp = +1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A cyclic sequence of oriented letters encoding an orientable surface:
// every symbol occurs exactly twice, with opposite exponents. The stored
// start position is arbitrary; canonical() picks the lexicographically
// least rotation for stable display.
class SurfaceWord {
public:
    SurfaceWord() = default;
    SurfaceWord(std::vector<Letter> letters, std::vector<std::string> names);

    const std::vector<Letter>& letters() const { return letters_; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return letters_.size(); }
    std::size_t symbol_count() const { return names_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& at(std::size_t i) const { return letters_[i]; }

    std::string name_of(int sym) const { return names_[static_cast<std::size_t>(sym)]; }

    // Mints a symbol from the reserved "$<k>" space (rejected by the parser,
    // so replayed traces cannot collide with user symbols).
    int fresh_symbol();

    std::string to_string() const;
    SurfaceWord canonical() const; // lexicographically least rotation

    // Validity check against the orientable-word invariants. When
    // `boundary` names a symbol, that symbol may occur exactly once
    // (used by transform3's open words).
    void validate(std::optional<int> boundary = std::nullopt) const;

    friend bool operator==(const SurfaceWord& a, const SurfaceWord& b) {
        return a.letters_ == b.letters_;
    }

    std::vector<Letter>& mutable_letters() { return letters_; }

private:
    std::vector<Letter> letters_;
    std::vector<std::string> names_;
    int fresh_count_ = 0;
};

// Record of one applied transform: kind 1..4, the positions it touched,
// and the resulting word.
struct TransformStep {
    int kind = 0;
    std::vector<std::size_t> positions;
    SurfaceWord after;
};

using TransformTrace = std::vector<TransformStep>;

// Genus plus the replayable reduction trace.
struct StandardForm {
    int genus = 0;
    TransformTrace trace;
};

// Parses whitespace-separated tokens `name` or `name^-1` (alphanumeric
// names) into a validated word. Throws input_error on malformed tokens,
// symbols not occurring exactly twice, or equal exponents (non-orientable).
SurfaceWord parse_word(const std::string& text);

// Same grammar, but one designated symbol may occur once (open boundary).
SurfaceWord parse_word_with_boundary(const std::string& text, const std::string& boundary);

// The standard-form word O_p: "a0 a0^-1" for p = 0, else the product of
// p handles a_i b_i a_i^-1 b_i^-1.
SurfaceWord standard_word(int genus);

// Leftmost interlaced pair {x, y} with occurrences alternating
// x...y...x^-1...y^-1 in the stored linear order; only pairs whose four
// positions all fall below `scan_limit` are considered.
struct InterlacedPair {
    int sym_a = 0;
    int sym_b = 0;
    std::array<std::size_t, 4> positions{}; // q1 < q2 < q3 < q4; a at q1,q3
};
std::optional<InterlacedPair> first_interlaced(const SurfaceWord& word, std::size_t scan_limit);

// Transform 1: Aaa^-1 ~ A, applied cyclically to fixpoint. Never reduces
// below length 2 (the sphere keeps one symbol pair).
SurfaceWord transform1(const SurfaceWord& word, TransformTrace* trace = nullptr);

// Transform 2: AabBb^-1a^-1 ~ AcBc^-1 with a fresh symbol c, to fixpoint.
SurfaceWord transform2(const SurfaceWord& word, TransformTrace* trace = nullptr);

// Transform 3: (Aa)(a^-1B) ~ (AB). The operands are open words sharing
// exactly the named symbol, once each, with opposite exponents. An empty
// result is normalized to the sphere word a0 a0^-1.
SurfaceWord transform3(const SurfaceWord& left, const SurfaceWord& right,
                       const std::string& shared, TransformTrace* trace = nullptr);

// Transform 4: AaBbCa^-1Db^-1E ~ ADCBE a b a^-1 b^-1 for an interlaced pair.
SurfaceWord transform4(const SurfaceWord& word, const InterlacedPair& pair,
                       TransformTrace* trace = nullptr);

// Three-phase reduction to standard form; genus = handles accumulated.
StandardForm reduce_to_standard(const SurfaceWord& word);

// Independent Euler-characteristic oracle: counts corner orbits V of the
// 2L-gon identification and returns (2 - (V - L + 1)) / 2.
int genus_by_corner_orbits(const SurfaceWord& word);

// Line-oriented trace log: "STEP <n> T<k> @<positions> -> <word>".
std::string trace_to_log(const TransformTrace& trace);

} // namespace mg
