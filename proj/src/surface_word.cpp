#include "maxgenus/surface_word.hpp"

#include "maxgenus/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace mg {

SurfaceWord::SurfaceWord(std::vector<Letter> letters, std::vector<std::string> names)
    : letters_(std::move(letters)), names_(std::move(names)) {
    for (const auto& n : names_) {
        if (n.size() > 1 && n[0] == '$') ++fresh_count_;
    }
}

int SurfaceWord::fresh_symbol() {
    ++fresh_count_;
    names_.push_back("$" + std::to_string(fresh_count_));
    return static_cast<int>(names_.size()) - 1;
}

std::string SurfaceWord::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << ' ';
        out << names_[static_cast<std::size_t>(letters_[i].sym)];
        if (letters_[i].exp < 0) out << "^-1";
    }
    return out.str();
}

SurfaceWord SurfaceWord::canonical() const {
    if (letters_.size() < 2) return *this;
    std::size_t best = 0;
    const std::size_t n = letters_.size();
    auto cmp_at = [&](std::size_t a, std::size_t b) {
        // lexicographic compare of rotations starting at a and b
        for (std::size_t k = 0; k < n; ++k) {
            const Letter& la = letters_[(a + k) % n];
            const Letter& lb = letters_[(b + k) % n];
            if (la != lb) return la < lb;
        }
        return false;
    };
    for (std::size_t i = 1; i < n; ++i)
        if (cmp_at(i, best)) best = i;
    std::vector<Letter> rotated(n);
    for (std::size_t k = 0; k < n; ++k) rotated[k] = letters_[(best + k) % n];
    return SurfaceWord(std::move(rotated), names_);
}

void SurfaceWord::validate(std::optional<int> boundary) const {
    std::vector<int> count(names_.size(), 0);
    std::vector<int> exp_sum(names_.size(), 0);
    for (const Letter& l : letters_) {
        if (l.exp != 1 && l.exp != -1)
            throw input_error("letter exponent must be +1 or -1");
        if (l.sym < 0 || static_cast<std::size_t>(l.sym) >= names_.size())
            throw input_error("letter symbol out of range");
        ++count[static_cast<std::size_t>(l.sym)];
        exp_sum[static_cast<std::size_t>(l.sym)] += l.exp;
    }
    for (std::size_t s = 0; s < names_.size(); ++s) {
        if (boundary && static_cast<int>(s) == *boundary) {
            if (count[s] != 1)
                throw input_error("boundary symbol '" + names_[s] + "' must occur exactly once");
            continue;
        }
        if (count[s] == 0) continue; // name retired by an earlier transform
        if (count[s] != 2)
            throw input_error("symbol '" + names_[s] + "' occurs " + std::to_string(count[s]) +
                              " times, expected 2");
        if (exp_sum[s] != 0)
            throw input_error("symbol '" + names_[s] +
                              "' occurs twice with equal exponents (non-orientable)");
    }
}

namespace {

SurfaceWord parse_impl(const std::string& text, const std::string* boundary) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::string tok;
    while (in >> tok) {
        int exp = +1;
        std::string name = tok;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            if (tok.substr(pos) != "^-1")
                throw input_error("malformed token '" + tok + "'");
            name = tok.substr(0, pos);
            exp = -1;
        }
        if (name.empty() || !std::all_of(name.begin(), name.end(), [](unsigned char c) {
                return std::isalnum(c);
            }))
            throw input_error("malformed token '" + tok + "'");
        auto [it, inserted] = index.try_emplace(name, static_cast<int>(names.size()));
        if (inserted) names.push_back(name);
        letters.push_back({it->second, exp});
    }
    if (letters.empty()) throw input_error("empty word");
    SurfaceWord w(std::move(letters), std::move(names));
    std::optional<int> bsym;
    if (boundary) {
        auto it = index.find(*boundary);
        if (it == index.end())
            throw input_error("boundary symbol '" + *boundary + "' not present");
        bsym = it->second;
    }
    w.validate(bsym);
    return w;
}

void push_step(TransformTrace* trace, int kind, std::vector<std::size_t> positions,
               const SurfaceWord& after) {
    if (trace) trace->push_back({kind, std::move(positions), after});
}

} // namespace

SurfaceWord parse_word(const std::string& text) { return parse_impl(text, nullptr); }

SurfaceWord parse_word_with_boundary(const std::string& text, const std::string& boundary) {
    return parse_impl(text, &boundary);
}

SurfaceWord standard_word(int genus) {
    if (genus < 0) throw input_error("genus must be non-negative");
    if (genus == 0) return parse_word("a0 a0^-1");
    std::ostringstream out;
    for (int i = 1; i <= genus; ++i)
        out << "a" << i << " b" << i << " a" << i << "^-1 b" << i << "^-1 ";
    return parse_word(out.str());
}

std::optional<InterlacedPair> first_interlaced(const SurfaceWord& word, std::size_t scan_limit) {
    const auto& ls = word.letters();
    const std::size_t n = std::min(scan_limit, ls.size());
    // first/second occurrence positions per symbol, within the limit
    std::vector<std::array<std::size_t, 2>> occ(word.symbol_count(), {n, n});
    for (std::size_t i = 0; i < n; ++i) {
        auto& o = occ[static_cast<std::size_t>(ls[i].sym)];
        if (o[0] == n) o[0] = i;
        else o[1] = i;
    }
    for (std::size_t q1 = 0; q1 < n; ++q1) {
        const int a = ls[q1].sym;
        const auto& oa = occ[static_cast<std::size_t>(a)];
        if (oa[0] != q1 || oa[1] == n) continue; // scan first occurrences only
        const std::size_t q3 = oa[1];
        for (std::size_t q2 = q1 + 1; q2 < q3; ++q2) {
            const int b = ls[q2].sym;
            const auto& ob = occ[static_cast<std::size_t>(b)];
            if (ob[0] != q2) continue;
            const std::size_t q4 = ob[1];
            if (q4 != n && q4 > q3)
                return InterlacedPair{a, b, {q1, q2, q3, q4}};
        }
    }
    return std::nullopt;
}

SurfaceWord transform1(const SurfaceWord& word, TransformTrace* trace) {
    SurfaceWord w = word;
    bool changed = true;
    while (changed && w.size() > 2) {
        changed = false;
        auto& ls = w.mutable_letters();
        const std::size_t n = ls.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + 1) % n;
            if (ls[i].sym == ls[j].sym) {
                std::vector<std::size_t> at{i, j};
                if (j > i) {
                    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(j));
                    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
                } else { // wrap-around pair: last and first
                    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
                    ls.erase(ls.begin());
                }
                push_step(trace, 1, std::move(at), w);
                changed = true;
                break;
            }
        }
    }
    return w;
}

SurfaceWord transform2(const SurfaceWord& word, TransformTrace* trace) {
    SurfaceWord w = word;
    bool changed = true;
    while (changed) {
        changed = false;
        const auto& ls = w.letters();
        const std::size_t n = ls.size();
        if (n < 4) break;
        for (std::size_t i = 0; i < n && !changed; ++i) {
            // block (a b) at i, i+1; look for (b^-1 a^-1) elsewhere
            const Letter a = ls[i];
            const Letter b = ls[(i + 1) % n];
            if (a.sym == b.sym) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || (j + 1) % n == i || j == (i + 1) % n) continue;
                const Letter bi = ls[j];
                const Letter ai = ls[(j + 1) % n];
                if (bi.sym == b.sym && bi.exp == -b.exp && ai.sym == a.sym && ai.exp == -a.exp) {
                    SurfaceWord next = w;
                    const int c = next.fresh_symbol();
                    std::vector<Letter> out;
                    out.reserve(n - 2);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (k == i) {
                            out.push_back({c, +1});
                            ++k; // skip b (may wrap; handled below)
                            if (k == n) {
                                // b sat at position 0; drop it from the front of out
                                out.erase(out.begin());
                            }
                        } else if (k == j) {
                            out.push_back({c, -1});
                            ++k;
                            if (k == n && !out.empty() && out.front().sym == a.sym)
                                out.erase(out.begin());
                        } else {
                            out.push_back(ls[k]);
                        }
                    }
                    next.mutable_letters() = std::move(out);
                    push_step(trace, 2, {i, (i + 1) % n, j, (j + 1) % n}, next);
                    w = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
    }
    return w;
}

SurfaceWord transform3(const SurfaceWord& left, const SurfaceWord& right,
                       const std::string& shared, TransformTrace* trace) {
    auto find_shared = [&](const SurfaceWord& w) -> std::pair<std::size_t, Letter> {
        std::size_t pos = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w.name_of(w.at(i).sym) == shared) {
                if (pos != w.size())
                    throw input_error("shared symbol '" + shared + "' occurs more than once");
                pos = i;
            }
        }
        if (pos == w.size())
            throw input_error("shared symbol '" + shared + "' missing");
        return {pos, w.at(pos)};
    };
    auto [lpos, la] = find_shared(left);
    auto [rpos, ra] = find_shared(right);
    if (la.exp == ra.exp)
        throw input_error("shared symbol must carry opposite exponents");

    // Rotate left so the shared letter is last, right so it is first,
    // then concatenate dropping both.
    std::vector<Letter> letters;
    std::vector<std::string> names;
    std::map<std::string, int> index;
    auto remap = [&](const SurfaceWord& w, const Letter& l) -> Letter {
        const std::string& nm = w.name_of(l.sym);
        auto [it, inserted] = index.try_emplace(nm, static_cast<int>(names.size()));
        if (inserted) names.push_back(nm);
        return {it->second, l.exp};
    };
    for (std::size_t k = 1; k < left.size(); ++k)
        letters.push_back(remap(left, left.at((lpos + k) % left.size())));
    for (std::size_t k = 1; k < right.size(); ++k)
        letters.push_back(remap(right, right.at((rpos + k) % right.size())));
    if (letters.empty()) {
        SurfaceWord sphere = standard_word(0);
        push_step(trace, 3, {lpos, rpos}, sphere);
        return sphere;
    }
    SurfaceWord merged(std::move(letters), std::move(names));
    merged.validate();
    push_step(trace, 3, {lpos, rpos}, merged);
    return merged;
}

SurfaceWord transform4(const SurfaceWord& word, const InterlacedPair& pair,
                       TransformTrace* trace) {
    const auto& ls = word.letters();
    const auto [q1, q2, q3, q4] = pair.positions;
    if (!(q1 < q2 && q2 < q3 && q3 < q4 && q4 < ls.size()) ||
        ls[q1].sym != pair.sym_a || ls[q3].sym != pair.sym_a ||
        ls[q2].sym != pair.sym_b || ls[q4].sym != pair.sym_b)
        throw input_error("pair is not interlaced at the given positions");

    std::vector<Letter> out;
    out.reserve(ls.size());
    auto seg = [&](std::size_t from, std::size_t to) { // [from, to)
        for (std::size_t k = from; k < to; ++k) out.push_back(ls[k]);
    };
    seg(0, q1);           // A
    seg(q3 + 1, q4);      // D
    seg(q2 + 1, q3);      // C
    seg(q1 + 1, q2);      // B
    seg(q4 + 1, ls.size()); // E
    out.push_back(ls[q1]);
    out.push_back(ls[q2]);
    out.push_back(ls[q3]);
    out.push_back(ls[q4]);

    SurfaceWord result = word;
    result.mutable_letters() = std::move(out);
    push_step(trace, 4, {q1, q2, q3, q4}, result);
    return result;
}

StandardForm reduce_to_standard(const SurfaceWord& word) {
    word.validate();
    StandardForm form;
    SurfaceWord w = word;
    while (true) {
        w = transform1(w, &form.trace);
        w = transform2(w, &form.trace);
        w = transform1(w, &form.trace);
        if (w.size() <= 2) break;
        auto pair = first_interlaced(w, w.size());
        if (!pair)
            throw internal_error("all-parallel residue failed to cancel: " + w.to_string());
        SurfaceWord moved = transform4(w, *pair, &form.trace);
        // The trailing handle shares no symbols with the prefix; split it off
        // and keep reducing the prefix.
        auto& ls = moved.mutable_letters();
        ls.erase(ls.end() - 4, ls.end());
        ++form.genus;
        w = std::move(moved);
        if (w.empty()) break;
    }
    return form;
}

int genus_by_corner_orbits(const SurfaceWord& word) {
    word.validate();
    const auto& ls = word.letters();
    const std::size_t n = ls.size(); // 2L sides
    if (n == 0) return 0;
    // Corner i sits between side i-1 and side i; side i runs corner i -> i+1.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    // Locate the partner of each side and glue with reversed orientation:
    // side i ~ side j reversed => corner i ~ corner j+1, corner i+1 ~ corner j.
    std::vector<std::size_t> partner(word.symbol_count(), n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& p = partner[static_cast<std::size_t>(ls[i].sym)];
        if (p == n) {
            p = i;
        } else {
            const std::size_t j = p;
            unite(i, (j + 1) % n);
            unite((i + 1) % n, j);
        }
    }
    std::size_t corners = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (find(i) == i) ++corners;
    const long L = static_cast<long>(n) / 2;
    const long chi = static_cast<long>(corners) - L + 1;
    const long twice_genus = 2 - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw internal_error("non-integer genus from corner orbits: chi=" + std::to_string(chi));
    return static_cast<int>(twice_genus / 2);
}

std::string trace_to_log(const TransformTrace& trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        out << "STEP " << i + 1 << " T" << trace[i].kind << " @";
        for (std::size_t k = 0; k < trace[i].positions.size(); ++k) {
            if (k) out << ',';
            out << trace[i].positions[k];
        }
        out << " -> " << trace[i].after.to_string() << '\n';
    }
    return out.str();
}

} // namespace mg
