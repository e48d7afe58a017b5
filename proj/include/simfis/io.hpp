#ifndef SIMFIS_IO_HPP
#define SIMFIS_IO_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simfis/audit.hpp"

namespace simfis::io {

/// Parse failure with a 1-based line/column position. line == 0 marks a
/// whole-document problem (e.g. a missing declaration).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(col) +
                                            ": " + msg
                                      : msg),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Everything a rule-base / observations / claims file can declare,
/// in declaration order.
struct Document {
    std::vector<Universe> universes;
    std::string output_name;  // empty until declared
    std::vector<FuzzySet> sets;
    std::vector<Rule> rules;
    std::vector<Claim> claims;

    const Universe* find_universe(std::string_view name) const {
        for (const auto& u : universes)
            if (u.name == name) return &u;
        return nullptr;
    }
    const FuzzySet* find_set(std::string_view name) const {
        for (const auto& s : sets)
            if (s.name == name) return &s;
        return nullptr;
    }
    const Rule* find_rule(std::string_view name) const {
        for (const auto& r : rules)
            if (r.name == name) return &r;
        return nullptr;
    }
    std::vector<Universe> input_universes() const {
        std::vector<Universe> out;
        for (const auto& u : universes)
            if (u.name != output_name) out.push_back(u);
        return out;
    }
};

enum class FileKind { RuleBase, Observations, Claims };

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

inline std::string format_rational(const Rational& r) { return r.to_string(); }

/// The bit-exact breakpoint rendering:
///   pwl on <var> [a, b]: (x1, v1) (x2, v2) ...
inline std::string format_pwl(const std::string& var, const PiecewiseLinear& f) {
    std::string s = "pwl on " + var + " [" + f.domain().lo.to_string() + ", " +
                    f.domain().hi.to_string() + "]:";
    for (const auto& p : f.points())
        s += " (" + p.x.to_string() + ", " + p.v.to_string() + ")";
    return s;
}

/// Exact decimal rendering with round-half-to-even at `precision` digits.
inline std::string format_decimal(const Rational& r, unsigned precision) {
    BigInt num = r.num() < 0 ? BigInt(-r.num()) : r.num();
    const BigInt& den = r.den();
    BigInt pow10 = 1;
    for (unsigned i = 0; i < precision; ++i) pow10 *= 10;
    BigInt scaled = num * pow10;
    BigInt q = scaled / den;
    BigInt rem = scaled % den;
    const BigInt twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) == 1)) ++q;

    std::string digits = q.str();
    if (digits.size() <= precision)
        digits.insert(digits.begin(), precision + 1 - digits.size(), '0');
    std::string out;
    if (r.sign() < 0 && q != 0) out += '-';
    out += digits.substr(0, digits.size() - precision);
    if (precision > 0) {
        out += '.';
        out += digits.substr(digits.size() - precision);
    }
    return out;
}

/// CSV with header "x,value" and n uniformly spaced rows over the domain.
inline void emit_csv(std::ostream& os, const PiecewiseLinear& f, size_t n, unsigned precision) {
    if (n < 2) throw std::invalid_argument("emit_csv: need at least 2 rows");
    os << "x,value\n";
    const Rational lo = f.domain().lo;
    const Rational width = f.domain().length();
    for (size_t i = 0; i < n; ++i) {
        Rational x = lo + width * Rational(static_cast<long long>(i),
                                           static_cast<long long>(n - 1));
        os << format_decimal(x, precision) << ',' << format_decimal(f.eval(x), precision)
           << '\n';
    }
}

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
inline bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}
inline bool digit(char c) { return c >= '0' && c <= '9'; }

class LineCursor {
public:
    LineCursor(std::string_view text, int line) : s_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool try_consume(std::string_view lit) {
        skip_ws();
        if (s_.substr(pos_).substr(0, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view lit) {
        if (!try_consume(lit)) fail("expected '" + std::string(lit) + "'");
    }

    std::string ident(const char* what) {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && ident_start(s_[pos_])) {
            ++pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        }
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string label(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && label_char(s_[pos_])) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(s_.substr(start, pos_ - start));
    }

    /// Non-whitespace run (used for key=value payloads).
    std::string word(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t') ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(s_.substr(start, pos_ - start));
    }

    Rational number(const char* what) {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
        size_t digits_start = pos_;
        while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
        if (pos_ == digits_start) {
            pos_ = start;
            fail(std::string("expected ") + what);
        }
        // "/q" or ".frac", only when digits follow (so "0 .. 3" lexes cleanly)
        if (pos_ + 1 < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.') &&
            digit(s_[pos_ + 1])) {
            ++pos_;
            while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
        }
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    [[noreturn]] void fail(std::string msg) const { throw ParseError(line_, col(), std::move(msg)); }
    int col() const { return static_cast<int>(pos_) + 1; }
    int line() const { return line_; }

private:
    std::string_view s_;
    size_t pos_ = 0;
    int line_;
};

inline std::vector<Breakpoint> breakpoint_list(LineCursor& cur) {
    std::vector<Breakpoint> pts;
    while (!cur.at_end()) {
        cur.expect("(");
        Rational x = cur.number("breakpoint x");
        cur.expect(",");
        Rational v = cur.number("breakpoint value");
        cur.expect(")");
        pts.push_back({std::move(x), std::move(v)});
    }
    return pts;
}

}  // namespace detail

/// Parses one line in the format format_pwl emits; returns (variable, function).
inline std::pair<std::string, PiecewiseLinear> parse_pwl(std::string_view text) {
    detail::LineCursor cur(text, 1);
    cur.expect("pwl");
    cur.expect("on");
    std::string var = cur.ident("variable name");
    cur.expect("[");
    Rational lo = cur.number("domain lower bound");
    cur.expect(",");
    Rational hi = cur.number("domain upper bound");
    cur.expect("]");
    cur.expect(":");
    std::vector<Breakpoint> pts = detail::breakpoint_list(cur);
    try {
        return {std::move(var), PiecewiseLinear(Interval(std::move(lo), std::move(hi)),
                                                std::move(pts))};
    } catch (const std::exception& e) {
        cur.fail(e.what());
    }
}

// ---------------------------------------------------------------------------
// Document parsing
// ---------------------------------------------------------------------------

namespace detail {

/// Parser state for one file, optionally layered over an already-parsed base
/// document (observations and claims resolve names from the rule-base file).
class DocumentParser {
public:
    DocumentParser(FileKind kind, const Document* base) : kind_(kind), base_(base) {}

    Document run(std::string_view text) {
        int line_no = 0;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t eol = text.find('\n', pos);
            std::string_view line =
                text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            parse_line(line, line_no);
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
        return std::move(doc_);
    }

private:
    void parse_line(std::string_view line, int line_no) {
        LineCursor cur(line, line_no);
        if (cur.at_end()) return;
        std::string head = cur.ident("declaration keyword");
        if (head == "universe")
            parse_universe(cur);
        else if (head == "output")
            parse_output(cur);
        else if (head == "set")
            parse_set(cur);
        else if (head == "rule")
            parse_rule(cur);
        else if (head == "claim")
            parse_claim(cur);
        else
            cur.fail("unknown declaration '" + head + "'");
    }

    void allow(LineCursor& cur, const char* what, bool ok) {
        if (!ok) cur.fail(std::string(what) + " lines are not allowed in this file");
    }

    const Universe* lookup_universe(const std::string& name) const {
        if (const Universe* u = doc_.find_universe(name)) return u;
        return base_ ? base_->find_universe(name) : nullptr;
    }
    const FuzzySet* lookup_set(const std::string& name) const {
        if (const FuzzySet* s = doc_.find_set(name)) return s;
        return base_ ? base_->find_set(name) : nullptr;
    }
    const Rule* lookup_rule(const std::string& name) const {
        if (const Rule* r = doc_.find_rule(name)) return r;
        return base_ ? base_->find_rule(name) : nullptr;
    }
    std::string output_name() const {
        if (!doc_.output_name.empty()) return doc_.output_name;
        return base_ ? base_->output_name : "";
    }
    std::vector<Universe> input_universes() const {
        std::vector<Universe> out;
        const std::string outv = output_name();
        if (base_)
            for (const auto& u : base_->universes)
                if (u.name != outv) out.push_back(u);
        for (const auto& u : doc_.universes)
            if (u.name != outv) out.push_back(u);
        return out;
    }

    void parse_universe(LineCursor& cur) {
        allow(cur, "'universe'", kind_ == FileKind::RuleBase);
        std::string name = cur.ident("universe name");
        if (lookup_universe(name)) cur.fail("duplicate universe '" + name + "'");
        if (lookup_set(name) || lookup_rule(name)) cur.fail("name '" + name + "' already used");
        cur.expect("=");
        Rational lo = cur.number("interval lower bound");
        cur.expect("..");
        Rational hi = cur.number("interval upper bound");
        if (!cur.at_end()) cur.fail("trailing input after universe declaration");
        if (!(lo < hi)) cur.fail("universe '" + name + "' needs lower bound < upper bound");
        doc_.universes.push_back(Universe{std::move(name), Interval(std::move(lo), std::move(hi))});
    }

    void parse_output(LineCursor& cur) {
        allow(cur, "'output'", kind_ == FileKind::RuleBase);
        std::string name = cur.ident("output variable name");
        if (!cur.at_end()) cur.fail("trailing input after output declaration");
        if (!doc_.output_name.empty()) cur.fail("duplicate output declaration");
        if (!lookup_universe(name)) cur.fail("unknown universe '" + name + "'");
        doc_.output_name = std::move(name);
    }

    void parse_set(LineCursor& cur) {
        std::string name = cur.ident("set name");
        if (lookup_set(name)) cur.fail("duplicate set '" + name + "'");
        if (lookup_universe(name)) cur.fail("name '" + name + "' already used");
        cur.expect("on");
        std::string var = cur.ident("variable name");
        const Universe* u = lookup_universe(var);
        if (!u) cur.fail("unknown universe '" + var + "'");
        cur.expect(":");
        std::vector<Breakpoint> pts = detail::breakpoint_list(cur);
        std::optional<PiecewiseLinear> membership;
        try {
            membership.emplace(u->interval, std::move(pts));
        } catch (const std::exception& e) {
            cur.fail(e.what());
        }
        FuzzySet set{std::move(name), *u, std::move(*membership)};
        for (const auto& v : validate_set(set))
            cur.fail((v.kind == SetViolation::Kind::Range ? std::string("range: ")
                                                          : std::string("domain: ")) +
                     v.detail);
        doc_.sets.push_back(std::move(set));
    }

    void parse_rule(LineCursor& cur) {
        allow(cur, "'rule'", kind_ == FileKind::RuleBase);
        std::string name = cur.ident("rule name");
        if (lookup_rule(name)) cur.fail("duplicate rule '" + name + "'");
        cur.expect(":");
        const std::string outv = output_name();
        if (outv.empty()) cur.fail("the output variable must be declared before rules");
        const std::vector<Universe> inputs = input_universes();
        if (inputs.empty()) cur.fail("rules need at least one input universe");

        Rule rule{std::move(name), {}, {}};
        for (size_t k = 0; k < inputs.size(); ++k) {
            if (k > 0) cur.expect(",");
            std::string aname = cur.ident("antecedent set name");
            const FuzzySet* a = lookup_set(aname);
            if (!a) cur.fail("unknown set '" + aname + "'");
            if (!(a->universe == inputs[k]))
                cur.fail("antecedent " + std::to_string(k + 1) + " ('" + aname +
                         "') must be on input variable '" + inputs[k].name + "'");
            rule.antecedents.push_back(std::move(aname));
        }
        cur.expect("->");
        std::string cname = cur.ident("consequent set name");
        const FuzzySet* c = lookup_set(cname);
        if (!c) cur.fail("unknown set '" + cname + "'");
        if (c->universe.name != outv)
            cur.fail("consequent '" + cname + "' must be on the output variable '" + outv + "'");
        rule.consequent = std::move(cname);
        if (!cur.at_end()) cur.fail("trailing input after rule declaration");
        doc_.rules.push_back(std::move(rule));
    }

    // Parts of a claim collected before the PiecewiseLinear can be built.
    struct ClaimHeader {
        std::string label;
        Claim::Target target = Claim::Target::FmpAggregate;
        std::string rule;
        std::string variable;
        ModificationType type = ModificationType::Type1;
        std::vector<FuzzySet> observations;
        std::optional<FuzzySet> bstar;

        bool is_fmp() const {
            return target == Claim::Target::FmpAggregate || target == Claim::Target::FmpSub;
        }
    };

    void parse_claim(LineCursor& cur) {
        allow(cur, "'claim'", kind_ != FileKind::Observations);
        ClaimHeader header;
        header.label = cur.label("claim label");

        std::optional<std::string> target, type, obs, bstar;
        while (cur.peek() != ':' && !cur.at_end()) {
            std::string key = cur.ident("claim field");
            cur.expect("=");
            std::string value = cur.word("field value");
            std::optional<std::string>* slot = key == "target" ? &target
                                               : key == "type" ? &type
                                               : key == "obs"  ? &obs
                                               : key == "bstar" ? &bstar
                                                                : nullptr;
            if (!slot) cur.fail("unknown claim field '" + key + "'");
            if (slot->has_value()) cur.fail("duplicate claim field '" + key + "'");
            *slot = std::move(value);
        }
        if (!target) cur.fail("claim needs a target= field");
        if (!type) cur.fail("claim needs a type= field");
        if (*type == "1")
            header.type = ModificationType::Type1;
        else if (*type == "2")
            header.type = ModificationType::Type2;
        else
            cur.fail("type must be 1 or 2");
        parse_claim_target(cur, header, *target);

        const Universe* target_universe = claim_universe(cur, header);
        if (header.is_fmp()) {
            if (bstar) cur.fail("bstar= is only valid for fmt targets");
            if (!obs) cur.fail("fmp claims need an obs= field");
            bind_observations(cur, header, *obs);
        } else {
            if (obs) cur.fail("obs= is only valid for fmp targets");
            if (!bstar) cur.fail("fmt claims need a bstar= field");
            const FuzzySet* b = lookup_set(*bstar);
            if (!b) cur.fail("unknown set '" + *bstar + "'");
            if (b->universe.name != output_name())
                cur.fail("bstar set '" + *bstar + "' must be on the output variable");
            header.bstar = *b;
        }

        cur.expect(":");
        std::vector<Breakpoint> pts = detail::breakpoint_list(cur);
        std::optional<PiecewiseLinear> claimed;
        try {
            claimed.emplace(target_universe->interval, std::move(pts));
        } catch (const std::exception& e) {
            cur.fail(e.what());
        }
        doc_.claims.push_back(Claim{std::move(header.label), header.target,
                                    std::move(header.rule), std::move(header.variable),
                                    header.type, std::move(*claimed),
                                    std::move(header.observations), std::move(header.bstar)});
    }

    void parse_claim_target(LineCursor& cur, ClaimHeader& claim, const std::string& value) {
        const auto args = [&](const std::string& v) -> std::vector<std::string> {
            size_t open = v.find('(');
            if (open == std::string::npos || v.back() != ')') return {};
            std::vector<std::string> out;
            std::string inner = v.substr(open + 1, v.size() - open - 2);
            size_t start = 0;
            while (true) {
                size_t comma = inner.find(',', start);
                out.push_back(inner.substr(start, comma - start));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            return out;
        };
        const std::string head = value.substr(0, value.find('('));
        std::vector<std::string> a = args(value);
        if (head == "fmp-aggregate" && value == head) {
            claim.target = Claim::Target::FmpAggregate;
        } else if (head == "fmp-sub" && a.size() == 1) {
            claim.target = Claim::Target::FmpSub;
            claim.rule = a[0];
        } else if (head == "fmt-aggregate" && a.size() == 1) {
            claim.target = Claim::Target::FmtAggregate;
            claim.variable = a[0];
        } else if (head == "fmt-sub" && a.size() == 2) {
            claim.target = Claim::Target::FmtSub;
            claim.rule = a[0];
            claim.variable = a[1];
        } else {
            cur.fail("bad target '" + value +
                     "' (want fmp-aggregate, fmp-sub(RULE), fmt-aggregate(VAR) or "
                     "fmt-sub(RULE,VAR))");
        }
        if (!claim.rule.empty() && !lookup_rule(claim.rule))
            cur.fail("unknown rule '" + claim.rule + "'");
    }

    /// Universe the claimed function must live on.
    const Universe* claim_universe(LineCursor& cur, const ClaimHeader& claim) {
        if (claim.is_fmp()) {
            const std::string outv = output_name();
            if (outv.empty()) cur.fail("the output variable must be declared before claims");
            return lookup_universe(outv);
        }
        for (const auto& u : input_universes())
            if (u.name == claim.variable) return lookup_universe(claim.variable);
        cur.fail("'" + claim.variable + "' is not an input variable");
    }

    void bind_observations(LineCursor& cur, ClaimHeader& claim, const std::string& list) {
        std::vector<std::string> names;
        size_t start = 0;
        while (true) {
            size_t comma = list.find(',', start);
            names.push_back(list.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        const std::vector<Universe> inputs = input_universes();
        if (names.size() != inputs.size())
            cur.fail("obs= names " + std::to_string(names.size()) + " sets but there are " +
                     std::to_string(inputs.size()) + " input variables");
        for (size_t k = 0; k < names.size(); ++k) {
            const FuzzySet* s = lookup_set(names[k]);
            if (!s) cur.fail("unknown set '" + names[k] + "'");
            if (!(s->universe == inputs[k]))
                cur.fail("observation '" + names[k] + "' must be on input variable '" +
                         inputs[k].name + "'");
            claim.observations.push_back(*s);
        }
    }

    FileKind kind_;
    const Document* base_;
    Document doc_;
};

}  // namespace detail

inline Document parse_document(std::string_view text, FileKind kind,
                               const Document* base = nullptr) {
    return detail::DocumentParser(kind, base).run(text);
}

struct RuleBaseFile {
    Document doc;
    RuleBase rulebase;
    std::vector<Claim> claims;
};

/// Parses and validates a full rule-base document (claims allowed inline).
inline RuleBaseFile parse_rulebase(std::string_view text) {
    Document doc = parse_document(text, FileKind::RuleBase);
    if (doc.output_name.empty()) throw ParseError(0, 0, "no output declaration");
    if (doc.rules.empty()) throw ParseError(0, 0, "no rules declared");
    std::vector<Universe> inputs = doc.input_universes();
    const Universe* output = doc.find_universe(doc.output_name);
    RuleBase rb(std::move(inputs), *output, doc.sets, doc.rules);
    std::vector<Claim> claims = doc.claims;
    return RuleBaseFile{std::move(doc), std::move(rb), std::move(claims)};
}

/// Observations file: one set per input variable, bound in declared variable
/// order.
inline Observations parse_observations(std::string_view text, const Document& base) {
    Document doc = parse_document(text, FileKind::Observations, &base);
    Observations obs;
    for (const Universe& u : base.input_universes()) {
        const FuzzySet* found = nullptr;
        for (const auto& s : doc.sets) {
            if (s.universe.name != u.name) continue;
            if (found)
                throw ParseError(0, 0, "more than one observation for variable '" + u.name + "'");
            found = &s;
        }
        if (!found) throw ParseError(0, 0, "missing observation for variable '" + u.name + "'");
        obs.sets.push_back(*found);
    }
    for (const auto& s : doc.sets)
        if (s.universe.name == base.output_name)
            throw ParseError(0, 0, "observation '" + s.name + "' is on the output variable '" +
                                       base.output_name + "'");
    return obs;
}

/// FMT input file: exactly one set, on the output variable.
inline FuzzySet parse_output_observation(std::string_view text, const Document& base) {
    Document doc = parse_document(text, FileKind::Observations, &base);
    if (doc.sets.size() != 1)
        throw ParseError(0, 0, "expected exactly one set on the output variable, got " +
                                   std::to_string(doc.sets.size()));
    if (doc.sets[0].universe.name != base.output_name)
        throw ParseError(0, 0, "set '" + doc.sets[0].name + "' is not on the output variable '" +
                                   base.output_name + "'");
    return doc.sets[0];
}

/// Claims file parsed against an existing rule base (may define helper sets).
inline std::vector<Claim> parse_claims(std::string_view text, const Document& base) {
    return parse_document(text, FileKind::Claims, &base).claims;
}

// ---------------------------------------------------------------------------
// Canonical document rendering (round-trips through parse_document)
// ---------------------------------------------------------------------------

inline std::string format_claim_line(const Claim& c) {
    std::string s = "claim " + c.label + " target=";
    switch (c.target) {
        case Claim::Target::FmpAggregate: s += "fmp-aggregate"; break;
        case Claim::Target::FmpSub: s += "fmp-sub(" + c.rule + ")"; break;
        case Claim::Target::FmtAggregate: s += "fmt-aggregate(" + c.variable + ")"; break;
        case Claim::Target::FmtSub: s += "fmt-sub(" + c.rule + "," + c.variable + ")"; break;
    }
    s += " type=";
    s += c.type == ModificationType::Type1 ? '1' : '2';
    if (c.is_fmp()) {
        s += " obs=";
        for (size_t k = 0; k < c.observations.size(); ++k) {
            if (k > 0) s += ',';
            s += c.observations[k].name;
        }
    } else {
        s += " bstar=" + c.bstar->name;
    }
    s += " :";
    for (const auto& p : c.claimed.points())
        s += " (" + p.x.to_string() + ", " + p.v.to_string() + ")";
    return s;
}

inline std::string format_document(const Document& doc) {
    std::string s;
    for (const auto& u : doc.universes)
        s += "universe " + u.name + " = " + u.interval.lo.to_string() + " .. " +
             u.interval.hi.to_string() + "\n";
    if (!doc.output_name.empty()) s += "output " + doc.output_name + "\n";
    for (const auto& set : doc.sets) {
        s += "set " + set.name + " on " + set.universe.name + " :";
        for (const auto& p : set.membership.points())
            s += " (" + p.x.to_string() + ", " + p.v.to_string() + ")";
        s += "\n";
    }
    for (const auto& r : doc.rules) {
        s += "rule " + r.name + " : ";
        for (size_t k = 0; k < r.antecedents.size(); ++k) {
            if (k > 0) s += ", ";
            s += r.antecedents[k];
        }
        s += " -> " + r.consequent + "\n";
    }
    for (const auto& c : doc.claims) s += format_claim_line(c) + "\n";
    return s;
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

/// ANSI color hooks; all empty by default so reports stay plain text.
struct Palette {
    const char* good = "";
    const char* bad = "";
    const char* reset = "";
};

namespace detail {

inline std::string witness_suffix(const Witness& w) {
    return " witness x=" + w.x.to_string() + " engine=" + w.engine.to_string() +
           " expected=" + w.expected.to_string();
}

}  // namespace detail

inline std::string verdict_line(const std::string& label, bool pass,
                                const std::optional<Witness>& w, const Palette& pal,
                                const char* pass_word = "PASS", const char* fail_word = "FAIL") {
    std::string s = "verdict " + label + " ";
    s += pass ? pal.good : pal.bad;
    s += pass ? pass_word : fail_word;
    s += pal.reset;
    if (!pass && w) s += detail::witness_suffix(*w);
    return s;
}

inline void render_audit_report(std::ostream& os, const AuditReport& report,
                                const Palette& pal = {}) {
    const char* mode = report.mode == AuditMode::Fmp ? "fmp" : "fmt";
    const char* type = report.type == ModificationType::Type1 ? "type1" : "type2";
    std::string current_rule;
    bool current_pass = true;
    const auto flush_rule = [&]() {
        if (report.mode == AuditMode::Fmt && !current_rule.empty())
            os << verdict_line(current_rule, current_pass, std::nullopt, pal) << "\n";
    };
    for (const auto& e : report.entries) {
        if (e.rule != current_rule) {
            flush_rule();
            current_rule = e.rule;
            current_pass = true;
        }
        current_pass = current_pass && e.pass;
        os << "audit " << mode << " " << type << " rule " << e.rule;
        if (report.mode == AuditMode::Fmt) os << " input " << e.variable;
        os << "\n";
        os << "  engine  : " << format_pwl(e.variable, e.engine) << "\n";
        os << "  expected: " << format_pwl(e.variable, e.expected) << "\n";
        const std::string label =
            report.mode == AuditMode::Fmt ? e.rule + "." + e.variable : e.rule;
        os << verdict_line(label, e.pass, e.witness, pal) << "\n";
    }
    flush_rule();
    os << "audit " << mode << " " << type << " overall: " << (report.all_pass() ? pal.good : pal.bad)
       << (report.all_pass() ? "PASS" : "FAIL") << pal.reset << "\n";
}

inline void render_claim_result(std::ostream& os, const Claim& claim, const ClaimResult& res,
                                const std::string& variable, const Palette& pal = {}) {
    os << format_claim_line(claim) << "\n";
    os << "  engine : " << format_pwl(variable, res.engine) << "\n";
    for (const auto& f : res.findings) {
        os << "  bound violation (";
        switch (f.kind) {
            case BoundFinding::Kind::ExceedsReference:
                os << "type-1 claim exceeds the function it modifies";
                break;
            case BoundFinding::Kind::BelowReference:
                os << "type-2 claim drops below the function it modifies";
                break;
            case BoundFinding::Kind::ExceedsOne:
                os << "type-2 claim exceeds 1";
                break;
        }
        os << ") on " << f.region.render() << "\n";
    }
    if (res.verdict == ClaimVerdict::Mismatch) {
        os << "  mismatch regions:";
        for (const auto& r : res.mismatches) os << " " << r.render();
        os << "\n";
    }
    const char* word = res.verdict == ClaimVerdict::Match       ? "MATCH"
                       : res.verdict == ClaimVerdict::Mismatch ? "MISMATCH"
                                                                : "VIOLATION";
    os << verdict_line(claim.label, res.verdict == ClaimVerdict::Match, res.witness, pal, "MATCH",
                       word)
       << "\n";
}

}  // namespace simfis::io

#endif  // SIMFIS_IO_HPP
