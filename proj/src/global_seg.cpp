#include "fuzzyseg/global_seg.hpp"

#include "fuzzyseg/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fuzzyseg {

void GlobalProblem::validate() const {
    if (symbols.empty()) throw input_error("global pattern must contain at least one symbol");
    if (lambda < 1) throw input_error("lambda must be positive");
    for (const auto& sym : symbols)
        if (sym.kind() == SymbolKind::char_table && lambda != 1)
            throw input_error("char_table symbol '" + sym.name() + "' requires lambda == 1");
}

DpTables::DpTables(int m, int n, int lambda) : m_(m), n_(n), lambda_(lambda) {
    s_offsets_.resize(static_cast<std::size_t>(m) + 1, 0);
    b_offsets_.resize(static_cast<std::size_t>(m) + 1, 0);
    std::size_t s_total = 0, b_total = 0;
    for (int i = 1; i <= m; ++i) {
        s_offsets_[static_cast<std::size_t>(i)] = s_total;
        s_total += static_cast<std::size_t>(n - i * lambda + 1);
        if (i >= 2) {
            b_offsets_[static_cast<std::size_t>(i)] = b_total;
            b_total += static_cast<std::size_t>(n - i * lambda + 1);
        }
    }
    s_.resize(s_total);
    b_.resize(b_total, 0);
}

bool DpTables::s_defined(int i, int j) const {
    return 1 <= i && i <= m_ && i * lambda_ <= j && j <= n_;
}

std::size_t DpTables::s_index(int i, int j) const {
    assert(s_defined(i, j));
    return s_offsets_[static_cast<std::size_t>(i)] + static_cast<std::size_t>(j - i * lambda_);
}

std::size_t DpTables::b_index(int i, int j) const {
    assert(2 <= i && s_defined(i, j));
    return b_offsets_[static_cast<std::size_t>(i)] + static_cast<std::size_t>(j - i * lambda_);
}

std::string DpTables::dump_tsv() const {
    std::ostringstream out;
    out << "i\\j";
    for (int j = 1; j <= n_; ++j) out << '\t' << j;
    out << '\n';
    for (int i = 1; i <= m_; ++i) {
        out << i;
        for (int j = 1; j <= n_; ++j) {
            out << '\t';
            if (s_defined(i, j))
                out << s(i, j).str();
            else
                out << '-';
        }
        out << '\n';
    }
    return out.str();
}

namespace {

void check_feasible(std::string_view text, const GlobalProblem& problem) {
    problem.validate();
    validate_text(text, problem.alphabet);
    const auto n = static_cast<long long>(text.size());
    if (static_cast<long long>(problem.size()) * problem.lambda > n)
        throw infeasible_error("infeasible: m * lambda = " +
                               std::to_string(problem.size() * problem.lambda) + " exceeds n = " +
                               std::to_string(n));
}

// First row: s[1, j] = degree of P[1] on T[1..j], one rightward sweep.
void fill_first_row(std::string_view text, const GlobalProblem& problem, DpTables& tables,
                    std::uint64_t& cells) {
    const int n = static_cast<int>(text.size());
    Evaluator ev(problem.symbol(1));
    for (int j = 1; j <= n; ++j) {
        ev.extend_right(text[static_cast<std::size_t>(j) - 1]);
        if (j >= problem.lambda) {
            tables.set_s(1, j, ev.degree());
            ++cells;
        }
    }
}

// One (i, j) cell: walk k from j-lambda+1 down to (i-1)*lambda+1, growing the
// candidate segment T[k..j] leftwards so each degree costs O(1). Strict
// improvement keeps the largest maximizing k.
void fill_cell(std::string_view text, const GlobalProblem& problem, DpTables& tables, int i,
               int j, std::uint64_t& cells) {
    const int lambda = problem.lambda;
    Degree best = Degree::zero();
    int best_k = j - lambda + 1;
    Evaluator ev(problem.symbol(i));
    for (int pos = j - lambda + 1; pos <= j; ++pos)
        ev.extend_right(text[static_cast<std::size_t>(pos) - 1]);
    for (int k = j - lambda + 1; k >= (i - 1) * lambda + 1; --k) {
        if (k < j - lambda + 1) ev.extend_left(text[static_cast<std::size_t>(k) - 1]);
        const Degree r = accumulate(problem.accumulator, tables.s(i - 1, k - 1), ev.degree());
        ++cells;
        if (r > best) {
            best = r;
            best_k = k;
        }
    }
    tables.set_s(i, j, best);
    tables.set_b(i, j, best_k);
}

} // namespace

DpTables gs_memoization_serial(std::string_view text, const GlobalProblem& problem,
                               RunCounters* counters) {
    check_feasible(text, problem);
    const int n = static_cast<int>(text.size());
    const int m = problem.size();
    DpTables tables(m, n, problem.lambda);

    std::uint64_t cells = 0;
    fill_first_row(text, problem, tables, cells);
    for (int i = 2; i <= m; ++i)
        for (int j = i * problem.lambda; j <= n; ++j) fill_cell(text, problem, tables, i, j, cells);
    if (counters) counters->cells += cells;
    return tables;
}

DpTables gs_memoization(std::string_view text, const GlobalProblem& problem,
                        RunCounters* counters) {
#ifndef _OPENMP
    return gs_memoization_serial(text, problem, counters);
#else
    check_feasible(text, problem);
    const int n = static_cast<int>(text.size());
    const int m = problem.size();
    DpTables tables(m, n, problem.lambda);

    std::uint64_t cells = 0;
    fill_first_row(text, problem, tables, cells);
    for (int i = 2; i <= m; ++i) {
        const int j_begin = i * problem.lambda;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : cells)
        for (int j = j_begin; j <= n; ++j) fill_cell(text, problem, tables, i, j, cells);
    }
    if (counters) counters->cells += cells;
    return tables;
#endif
}

Decomposition gs_extract(const DpTables& tables, std::string_view text,
                         const GlobalProblem& problem) {
    const int n = tables.n();
    const int m = tables.m();
    std::vector<Segment> segments;
    segments.reserve(static_cast<std::size_t>(m));
    int j = n;
    for (int i = m; i >= 2; --i) {
        const int k = tables.b(i, j);
        segments.push_back({k, j});
        j = k - 1;
    }
    segments.push_back({1, j});
    std::reverse(segments.begin(), segments.end());

    Decomposition out;
    out.segments = std::move(segments);
    out.value = Degree::one();
    for (int i = 1; i <= m; ++i) {
        const Degree d = degree_of(problem.symbol(i), slice(text, out.segments[static_cast<std::size_t>(i) - 1]));
        out.degrees.push_back(d);
        out.value = accumulate(problem.accumulator, out.value, d);
    }
    return out;
}

Degree sigma(std::string_view text, const GlobalProblem& problem) {
    const DpTables tables = gs_memoization(text, problem);
    return tables.s(problem.size(), static_cast<int>(text.size()));
}

} // namespace fuzzyseg
