#include "skewrit/formula.hpp"

#include <cctype>

namespace skewrit {

namespace {

FormulaPtr finish(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr make_var(int index) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    Formula f;
    f.kind = Formula::Kind::Var;
    f.var_index = index;
    f.size = 1;
    f.height = 0;
    f.max_var = index;
    return finish(std::move(f));
}

FormulaPtr make_const(const Rat& c) {
    Formula f;
    f.kind = Formula::Kind::Const;
    f.value = c;
    f.size = 1;
    f.height = 0;
    f.max_var = 0;
    return finish(std::move(f));
}

FormulaPtr make_add(FormulaPtr l, FormulaPtr r) {
    Formula f;
    f.kind = Formula::Kind::Add;
    f.size = 1 + l->size + r->size;
    f.height = std::max(l->height, r->height);
    f.max_var = std::max(l->max_var, r->max_var);
    f.left = std::move(l);
    f.right = std::move(r);
    return finish(std::move(f));
}

FormulaPtr make_mul(FormulaPtr l, FormulaPtr r) {
    Formula f;
    f.kind = Formula::Kind::Mul;
    f.size = 1 + l->size + r->size;
    f.height = std::max(l->height, r->height);
    f.max_var = std::max(l->max_var, r->max_var);
    f.left = std::move(l);
    f.right = std::move(r);
    return finish(std::move(f));
}

FormulaPtr make_inv(FormulaPtr c) {
    Formula f;
    f.kind = Formula::Kind::Inv;
    f.size = 1 + c->size;
    f.height = 1 + c->height;
    f.max_var = c->max_var;
    f.left = std::move(c);
    return finish(std::move(f));
}

FormulaPtr make_sub(FormulaPtr l, FormulaPtr r) {
    return make_add(std::move(l), make_mul(make_const(Rat(-1)), std::move(r)));
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::Var: return a->var_index == b->var_index;
        case Formula::Kind::Const: return a->value == b->value;
        case Formula::Kind::Add:
        case Formula::Kind::Mul:
            return structurally_equal(a->left, b->left) && structurally_equal(a->right, b->right);
        case Formula::Kind::Inv: return structurally_equal(a->left, b->left);
    }
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    FormulaPtr run() {
        FormulaPtr f = formula();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    FormulaPtr formula() {
        FormulaPtr acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = make_add(acc, term());
            } else if (peek() == '-') {
                ++pos_;
                acc = make_sub(acc, term());
            } else {
                return acc;
            }
        }
    }

    FormulaPtr term() {
        FormulaPtr acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = make_mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    FormulaPtr factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (s_.compare(pos_, 3, "inv") == 0) {
            pos_ += 3;
            expect('(');
            FormulaPtr f = formula();
            expect(')');
            return make_inv(f);
        }
        if (c == '(') {
            ++pos_;
            FormulaPtr f = formula();
            expect(')');
            return f;
        }
        if (c == 'x') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) throw ParseError("variable index expected after 'x'", pos_);
            long idx = std::stol(s_.substr(start, pos_ - start));
            if (idx == 0) throw ParseError("variable index 0 is invalid", start);
            return make_var(static_cast<int>(idx));
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            if (c == '-') ++pos_;
            size_t digits = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == digits) throw ParseError("number expected", start);
            std::string text = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (pos_ == dstart) throw ParseError("denominator expected", pos_);
                text += "/" + s_.substr(dstart, pos_ - dstart);
            }
            return make_const(Rat::parse(text));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

// precedence: 0 formula-level, 1 term-level, 2 factor-level
std::string print_prec(const Formula* f, int prec) {
    switch (f->kind) {
        case Formula::Kind::Var: return "x" + std::to_string(f->var_index);
        case Formula::Kind::Const: {
            std::string s = f->value.str();
            if ((f->value.sign() < 0) && prec >= 1) return "(" + s + ")";
            return s;
        }
        case Formula::Kind::Add: {
            // re-sugar l + (-1)*r as l - r
            std::string out;
            const Formula* r = f->right.get();
            if (r->kind == Formula::Kind::Mul && r->left->kind == Formula::Kind::Const &&
                r->left->value == Rat(-1)) {
                out = print_prec(f->left.get(), 0) + " - " + print_prec(r->right.get(), 1);
            } else {
                out = print_prec(f->left.get(), 0) + " + " + print_prec(f->right.get(), 1);
            }
            if (prec >= 1) return "(" + out + ")";
            return out;
        }
        case Formula::Kind::Mul: {
            std::string out = print_prec(f->left.get(), 1) + "*" + print_prec(f->right.get(), 2);
            if (prec >= 2) return "(" + out + ")";
            return out;
        }
        case Formula::Kind::Inv: return "inv(" + print_prec(f->left.get(), 0) + ")";
    }
    throw std::logic_error("unreachable");
}

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const FormulaPtr& f) { return print_prec(f.get(), 0); }

Measures measures(const FormulaPtr& f) { return Measures{f->size, f->height, f->max_var}; }

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        v.push_back({"x1", parse("x1"), CorpusStatus::Nonzero});
        v.push_back({"inv-cancel", parse("inv(x1)*x1 - 1"), CorpusStatus::Identity});
        v.push_back({"comm-inv", parse("inv(x1*x2 - x2*x1)"), CorpusStatus::Nonzero});
        v.push_back(
            {"hua", parse("inv(x1 + x1*inv(x2)*x1) + inv(x1+x2) - inv(x1)"), CorpusStatus::Identity});
        v.push_back(
            {"nested-diff", parse("inv(x3 + x1*inv(x2)*x1) - inv(x3)"), CorpusStatus::Nonzero});
        return v;
    }();
    return entries;
}

FormulaPtr random_formula(std::mt19937_64& rng, int nvars, int max_size, int max_height) {
    // grow a tree top-down against the remaining size and height budgets
    std::uniform_int_distribution<int> kind_pick(0, 9);
    std::uniform_int_distribution<int> var_pick(1, nvars);
    std::uniform_int_distribution<int> const_pick(-3, 3);

    struct Gen {
        std::mt19937_64& rng;
        std::uniform_int_distribution<int>& kind_pick;
        std::uniform_int_distribution<int>& var_pick;
        std::uniform_int_distribution<int>& const_pick;

        FormulaPtr leaf() {
            if (kind_pick(rng) < 8) return make_var(var_pick(rng));
            int c = const_pick(rng);
            return make_const(Rat(c == 0 ? 1 : c));
        }

        FormulaPtr go(int size_budget, int height_budget) {
            if (size_budget <= 1) return leaf();
            int k = kind_pick(rng);
            if (k < 2) return leaf();
            if (k < 5 && height_budget > 0 && size_budget >= 2) {
                return make_inv(go(size_budget - 1, height_budget - 1));
            }
            int left_budget = 1 + (size_budget - 2) / 2;
            if (k % 2 == 0)
                return make_add(go(left_budget, height_budget),
                                go(size_budget - 1 - left_budget, height_budget));
            return make_mul(go(left_budget, height_budget),
                            go(size_budget - 1 - left_budget, height_budget));
        }
    };
    Gen g{rng, kind_pick, var_pick, const_pick};
    return g.go(max_size, max_height);
}

}  // namespace skewrit
