#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rbq/multipoly.hpp"
#include "rbq/operator.hpp"
#include "rbq/parse.hpp"

namespace rbq {

enum class WeightMode { Zero, SymbolicLambda };

inline std::string default_data_dir() {
#ifdef RBQ_DEFAULT_DATA_DIR
    return RBQ_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

// One polynomial of the generated system, with the residual slot it came
// from: residual j, row k (coordinate), column i (first basis argument).
struct GeneratedPoly {
    MultiPoly poly;  // as generated
    MultiPoly rep;   // sign/scalar representative used for matching
    int j, k, i;
};

struct PolySystem {
    WeightMode mode;
    std::vector<GeneratedPoly> polys;        // deduped, in generation order
    std::vector<std::size_t> eval_order;     // cheapest (fewest terms) first
};

inline const char* matrix_unknown_name(int row, int col) {
    static const char* names[4][4] = {
        {"a11", "a12", "a13", "a14"},
        {"a21", "a22", "a23", "a24"},
        {"a31", "a32", "a33", "a34"},
        {"a41", "a42", "a43", "a44"},
    };
    return names[row][col];
}

// Instantiates the operator matrix with sixteen symbolic unknowns, takes the
// 64 entries of the four characterization residuals (weight zero or a
// symbolic lambda), drops the identically-zero ones and dedupes the rest up
// to sign and rational scale. A rational matrix is a Rota-Baxter operator of
// the corresponding weight iff every returned polynomial vanishes at it.
inline PolySystem generate_system(WeightMode mode) {
    OperatorMatrix<MultiPoly> P;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) P.a[r][c] = MultiPoly::var(matrix_unknown_name(r, c));
    P.weight = mode == WeightMode::SymbolicLambda ? MultiPoly::var("lambda") : MultiPoly();

    auto residuals = characterization_residuals(P);

    PolySystem sys;
    sys.mode = mode;
    std::set<MultiPoly> seen;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            for (int i = 0; i < 4; ++i) {
                const MultiPoly& p = residuals[j][k][i];
                if (p.is_zero()) continue;
                MultiPoly rep = p.sign_scalar_rep();
                if (!seen.insert(rep).second) continue;
                sys.polys.push_back(GeneratedPoly{p, std::move(rep), j, k, i});
            }
        }
    }
    sys.eval_order.resize(sys.polys.size());
    for (std::size_t n = 0; n < sys.eval_order.size(); ++n) sys.eval_order[n] = n;
    std::stable_sort(sys.eval_order.begin(), sys.eval_order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return sys.polys[a].poly.term_count() < sys.polys[b].poly.term_count();
                     });
    return sys;
}

// true iff every system polynomial vanishes at the given matrix and weight
inline bool system_vanishes_at(const PolySystem& sys, const Mat4<Rational>& m,
                               const Rational& lambda) {
    std::map<std::string, Rational> a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a[matrix_unknown_name(r, c)] = m[r][c];
    a["lambda"] = lambda;
    for (const GeneratedPoly& g : sys.polys)
        if (!g.poly.eval(a).is_zero()) return false;
    return true;
}

struct CorpusEntry {
    std::string label;  // trailing-comment tag, may be empty
    MultiPoly poly;
    std::size_t line;
};

// One polynomial per line; '#' starts a comment (a trailing comment is kept
// as the entry's label). Blank and comment-only lines are skipped.
inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusLoadError("cannot open corpus file " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string label;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream ls(line.substr(hash + 1));
            ls >> label;
            line = line.substr(0, hash);
        }
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        try {
            out.push_back(CorpusEntry{label, parse_poly(line), lineno});
        } catch (const ParseError& e) {
            throw CorpusLoadError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw CorpusLoadError(path + ": no polynomials");
    return out;
}

// Variable renames applied to corpus entries that reference a symbol which is
// not a matrix unknown (and not lambda). Each application is logged in the
// diff report; the corpus files themselves are never rewritten.
inline const std::map<std::string, std::string>& known_corpus_typos() {
    static const std::map<std::string, std::string> t = {{"a35", "a23"}};
    return t;
}

struct TranscriptionDiff {
    std::size_t corpus_size = 0;
    std::size_t matched = 0;
    std::vector<CorpusEntry> corpus_unmatched;
    std::vector<GeneratedPoly> generated_unmatched;
    std::vector<std::string> applied_substitutions;

    bool clean() const { return corpus_unmatched.empty() && generated_unmatched.empty(); }
};

// Two-sided matching up to sign and rational scale between the generated
// system and a transcription corpus.
inline TranscriptionDiff compare_with_transcription(const PolySystem& sys,
                                                    const std::vector<CorpusEntry>& corpus) {
    std::set<std::string> valid;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) valid.insert(matrix_unknown_name(r, c));
    valid.insert("lambda");

    std::map<MultiPoly, std::size_t> generated_by_rep;
    for (std::size_t n = 0; n < sys.polys.size(); ++n)
        generated_by_rep.emplace(sys.polys[n].rep, n);

    TranscriptionDiff diff;
    diff.corpus_size = corpus.size();
    std::set<std::size_t> hit;
    for (const CorpusEntry& entry : corpus) {
        MultiPoly p = entry.poly;
        std::map<std::string, MultiPoly> subst;
        for (Sym v : p.vars()) {
            if (valid.count(v.name())) continue;
            auto typo = known_corpus_typos().find(v.name());
            if (typo != known_corpus_typos().end()) {
                subst.emplace(typo->first, MultiPoly::var(typo->second));
                diff.applied_substitutions.push_back(
                    (entry.label.empty() ? "line " + std::to_string(entry.line) : entry.label) +
                    ": " + typo->first + " -> " + typo->second);
            }
        }
        if (!subst.empty()) p = p.substitute(subst);
        auto it = generated_by_rep.find(p.sign_scalar_rep());
        if (it == generated_by_rep.end()) {
            diff.corpus_unmatched.push_back(entry);
        } else {
            ++diff.matched;
            hit.insert(it->second);
        }
    }
    for (std::size_t n = 0; n < sys.polys.size(); ++n)
        if (!hit.count(n)) diff.generated_unmatched.push_back(sys.polys[n]);
    return diff;
}

}  // namespace rbq
