#include "ingleton/expression.hpp"

#include <cctype>

#include "ingleton/entropy.hpp"
#include "ingleton/error.hpp"

namespace ingleton::entropy {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Query::Kind head() {
        skip_ws();
        const auto rest = text_.substr(pos_);
        if (rest.starts_with("Ing")) {
            pos_ += 3;
            return Query::Kind::Ingleton;
        }
        if (rest.starts_with("H")) {
            pos_ += 1;
            return Query::Kind::Entropy;
        }
        if (rest.starts_with("I")) {
            pos_ += 1;
            return Query::Kind::Information;
        }
        if (rest.starts_with("L")) {
            pos_ += 1;
            return Query::Kind::Ell;
        }
        throw SyntaxError(pos_, "one of 'H', 'I', 'Ing', 'L'", found());
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(pos_, std::string("'") + c + "'", found());
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::size_t index() {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (value >= 32) throw SyntaxError(start, "a variable index below 32", found_at(start));
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError(pos_, "a variable index", found());
        return value;
    }

    // SET := INDEX (',' INDEX)*
    VarSet set() {
        VarSet s = VarSet::single(index());
        while (peek(',')) {
            // lookahead: a comma inside a SET must be followed by an index
            const std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s = s | VarSet::single(index());
            } else {
                pos_ = save;
                break;
            }
        }
        return s;
    }

    VarSet role() {
        if (accept('{')) {
            const VarSet s = set();
            expect('}');
            return s;
        }
        return VarSet::single(index());
    }

    void finish() {
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "end of expression", found());
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string found() const { return found_at(pos_); }
    std::string found_at(std::size_t p) const {
        if (p >= text_.size()) return "end of input";
        return std::string("'") + text_[p] + "'";
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Query parse_expression(std::string_view text) {
    Parser p(text);
    Query q;
    q.kind_ = p.head();
    p.expect('(');
    switch (q.kind_) {
        case Query::Kind::Entropy:
            q.roles_.push_back(p.set());
            break;
        case Query::Kind::Information:
            q.roles_.push_back(p.set());
            p.expect(':');
            q.roles_.push_back(p.set());
            break;
        case Query::Kind::Ingleton:
            for (int r = 0; r < 4; ++r) {
                if (r) p.expect(',');
                q.roles_.push_back(p.role());
            }
            break;
        case Query::Kind::Ell:
            q.roles_.push_back(p.role());
            p.expect(',');
            q.roles_.push_back(p.role());
            break;
    }
    if (p.accept('|')) q.given_ = p.set();
    p.expect(')');
    p.finish();
    return q;
}

double Query::evaluate(const JointDistribution& dist) const {
    VarSet used = given_;
    for (auto r : roles_) used = used | r;
    if (used.max_index() >= dist.arity()) {
        fail(ErrorKind::UnknownVariableIndex, "variable " + std::to_string(used.max_index()) +
                                                  " not present in a distribution of arity " +
                                                  std::to_string(dist.arity()));
    }
    auto cond_h = [&](VarSet target, VarSet given) {
        const VarSet rest = target - given;
        return rest.empty() ? 0.0 : entropy(dist, rest, given);
    };
    switch (kind_) {
        case Kind::Entropy:
            return cond_h(roles_[0], given_);
        case Kind::Information:
            return cond_h(roles_[0], given_) - cond_h(roles_[0], roles_[1] | given_);
        case Kind::Ingleton:
            return ingleton(dist, {roles_[0], roles_[1], roles_[2], roles_[3]}, given_);
        case Kind::Ell:
            return ell_metric(dist, roles_[0], roles_[1], given_);
    }
    return 0.0;
}

std::string Query::to_string() const {
    auto set_text = [](VarSet s) {
        std::string t;
        for (auto i : s.indices()) {
            if (!t.empty()) t += ',';
            t += std::to_string(i);
        }
        return t;
    };
    auto role_text = [&](VarSet s) { return s.size() == 1 ? set_text(s) : "{" + set_text(s) + "}"; };
    std::string out;
    switch (kind_) {
        case Kind::Entropy: out = "H(" + set_text(roles_[0]); break;
        case Kind::Information: out = "I(" + set_text(roles_[0]) + ":" + set_text(roles_[1]); break;
        case Kind::Ingleton:
            out = "Ing(" + role_text(roles_[0]) + "," + role_text(roles_[1]) + "," + role_text(roles_[2]) + "," +
                  role_text(roles_[3]);
            break;
        case Kind::Ell: out = "L(" + role_text(roles_[0]) + "," + role_text(roles_[1]); break;
    }
    if (!given_.empty()) out += "|" + set_text(given_);
    return out + ")";
}

}  // namespace ingleton::entropy
