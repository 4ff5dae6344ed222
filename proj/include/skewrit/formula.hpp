#ifndef SKEWRIT_FORMULA_HPP
#define SKEWRIT_FORMULA_HPP

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewrit/matrix.hpp"
#include "skewrit/rational.hpp"

namespace skewrit {

struct ParseError : std::invalid_argument {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Noncommutative rational formula. Size counts every node (leaves included);
// inversion height is the maximum number of Inv nodes on a root-to-leaf path.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { Var, Const, Add, Mul, Inv };
    Kind kind;
    int var_index = 0;  // Var, 1-based
    Rat value;          // Const
    FormulaPtr left, right;
    int size = 1;
    int height = 0;
    int max_var = 0;
};

FormulaPtr make_var(int index);
FormulaPtr make_const(const Rat& c);
FormulaPtr make_add(FormulaPtr l, FormulaPtr r);
FormulaPtr make_mul(FormulaPtr l, FormulaPtr r);
FormulaPtr make_inv(FormulaPtr c);
FormulaPtr make_sub(FormulaPtr l, FormulaPtr r);  // desugars to l + (-1)*r

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Grammar:
//   formula := term (("+"|"-") term)* ;
//   term := factor ("*" factor)* ;
//   factor := "inv" "(" formula ")" | "(" formula ")" | VAR | RATIONAL ;
//   VAR := "x" DIGITS ;  RATIONAL := INT ("/" POSINT)? ;
FormulaPtr parse(const std::string& text);
std::string print(const FormulaPtr& f);

struct Measures {
    int size;
    int inversion_height;
    int variable_count;  // highest variable index used
};
Measures measures(const FormulaPtr& f);

template <class F>
struct EvalResult {
    std::optional<Mat<F>> value;
    std::string not_defined_path;  // path to the Inv node whose argument was singular
    bool defined() const { return value.has_value(); }
};

// Bottom-up evaluation over m x m matrices; constants embed as c*I_m. A
// singular inverse argument yields NotDefined (a value, not an error).
template <class F>
EvalResult<F> eval(const FormulaPtr& f, const std::vector<Mat<F>>& point, size_t m,
                   const F& like) {
    struct Walker {
        const std::vector<Mat<F>>& pt;
        size_t m;
        const F& like;
        std::string fail;

        std::optional<Mat<F>> go(const Formula* f, const std::string& path) {
            switch (f->kind) {
                case Formula::Kind::Var: {
                    size_t idx = static_cast<size_t>(f->var_index);
                    if (idx == 0 || idx > pt.size())
                        throw std::invalid_argument("point tuple too short for x" +
                                                    std::to_string(f->var_index));
                    return pt[idx - 1];
                }
                case Formula::Kind::Const:
                    return Mat<F>::identity(m, like).scaled(from_rat(like, f->value));
                case Formula::Kind::Add: {
                    auto l = go(f->left.get(), path + "/add.0");
                    if (!l) return std::nullopt;
                    auto r = go(f->right.get(), path + "/add.1");
                    if (!r) return std::nullopt;
                    return *l + *r;
                }
                case Formula::Kind::Mul: {
                    auto l = go(f->left.get(), path + "/mul.0");
                    if (!l) return std::nullopt;
                    auto r = go(f->right.get(), path + "/mul.1");
                    if (!r) return std::nullopt;
                    return *l * *r;
                }
                case Formula::Kind::Inv: {
                    auto c = go(f->left.get(), path + "/inv");
                    if (!c) return std::nullopt;
                    auto res = eliminate(*c, true);
                    if (!res.inverse) {
                        fail = path.empty() ? "inv" : path + "/inv";
                        return std::nullopt;
                    }
                    return std::move(*res.inverse);
                }
            }
            throw std::logic_error("unreachable");
        }
    };
    for (const auto& p : point)
        if (p.rows() != m || p.cols() != m) throw ShapeMismatch("eval: point dimension mismatch");
    Walker w{point, m, like, {}};
    EvalResult<F> out;
    out.value = w.go(f.get(), "");
    out.not_defined_path = w.fail;
    return out;
}

template <class F>
EvalResult<F> eval(const FormulaPtr& f, const std::vector<Mat<F>>& point) {
    if (point.empty()) throw std::invalid_argument("eval: empty point needs explicit dimension");
    return eval(f, point, point.front().rows(), point.front().like());
}

enum class CorpusStatus { Identity, Nonzero };
struct CorpusEntry {
    std::string name;
    FormulaPtr formula;
    CorpusStatus expected;
};
// Named identities and non-identities used throughout the test pipeline.
const std::vector<CorpusEntry>& corpus();

// Deterministic random formula with bounded size and inversion height.
FormulaPtr random_formula(std::mt19937_64& rng, int nvars, int max_size, int max_height);

}  // namespace skewrit

#endif
