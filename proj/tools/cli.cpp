#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace hwn::cli {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

// "a=1,b=2,3": a comma-separated token without '=' extends the previous value.
std::map<std::string, std::string> key_values(const std::string& text, char sep) {
    std::map<std::string, std::string> kv;
    std::string last;
    for (const auto& tok : split(text, sep)) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            if (last.empty()) throw ParseError("expected key=value, got '" + tok + "'");
            kv[last] += "," + tok;
            continue;
        }
        last = trim(tok.substr(0, eq));
        if (kv.count(last)) throw ParseError("duplicate key '" + last + "'");
        kv[last] = trim(tok.substr(eq + 1));
    }
    return kv;
}

int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw ParseError("not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok));
    return out;
}

Rat parse_rat(const std::string& s) {
    try {
        return Rat::parse(s);
    } catch (const std::exception&) {
        throw ParseError("not a rational number: '" + s + "'");
    }
}

Half parse_half(const std::string& s) {
    try {
        return Half::parse(s);
    } catch (const std::exception&) {
        throw ParseError("not a half-integer: '" + s + "'");
    }
}

void reject_unknown(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> allowed,
                    const std::string& what) {
    for (const auto& [k, v] : kv) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
            throw ParseError("unknown " + what + " key '" + k + "'");
    }
}

std::string need(const std::map<std::string, std::string>& kv, const std::string& key, const std::string& what) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(what + " needs '" + key + "='");
    return it->second;
}

std::string half_list(const Signature& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
    return out;
}

std::string eval_str(const Evaluation& e) {
    switch (e.kind) {
    case Evaluation::Kind::Zero: return "0";
    case Evaluation::Kind::Pole: return "pole";
    case Evaluation::Kind::Value: return e.value.str();
    }
    return "?";
}

std::string decimal(const Rat& r) {
    std::ostringstream os;
    os << std::setprecision(17) << r.to_double();
    return os.str();
}

Json eval_json(const Evaluation& e, bool with_decimal) {
    Json j;
    j["kind"] = e.kind == Evaluation::Kind::Value ? "value" : (e.kind == Evaluation::Kind::Zero ? "zero" : "pole");
    j["value"] = eval_str(e);
    if (with_decimal && e.kind == Evaluation::Kind::Value) j["decimal"] = decimal(e.value);
    return j;
}

Json multiset_json(const FactoredFn::Multiset& m) {
    Json arr = Json::array();
    for (const auto& [shift, exp] : m) arr.push_back({{"shift", shift.str()}, {"exp", exp}});
    return arr;
}

// Numerator and denominator printed separately, for the CSV table.
std::pair<std::string, std::string> split_fraction(const FactoredFn& f) {
    std::vector<LinearFactor> num, den;
    for (const auto& [s, e] : f.num())
        for (int i = 0; i < e; ++i) num.push_back({s});
    for (const auto& [s, e] : f.den())
        for (int i = 0; i < e; ++i) den.push_back({s});
    return {FactoredFn::raw(f.constant(), num, {}).str(), FactoredFn::raw(Rat(1), den, {}).str()};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string signature_of(const KType& t) {
    if (t.family == Family::SU) return str(t.weight_q) + ";" + str(t.weight);
    if (t.m0) return t.m0->str() + ";" + str(t.weight);
    return str(t.weight);
}

struct Context {
    GroupSpec g;
    FiberSpec f;
};

Context context(const Request& req) {
    if (req.group.empty()) throw ParseError("--group is required");
    Context c{parse_group(req.group), {}};
    c.f = parse_fiber(c.g, req.fiber);
    return c;
}

int checked_degree(const Request& req, int fallback) {
    const int d = req.degree_given ? req.degree : fallback;
    if (d < 0) throw ParseError("--degree must be non-negative");
    if (d > max_degree())
        throw ParseError("--degree " + std::to_string(d) + " exceeds HWNORM_MAX_DEGREE=" +
                         std::to_string(max_degree()));
    return d;
}

const Rat& need_lambda(const Request& req) {
    if (!req.lambda) throw ParseError("--lambda is required");
    return *req.lambda;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_decompose(const Request& req, std::ostream& out) {
    const Context c = context(req);
    const int N = checked_degree(req, 0);
    const auto types = decompose(c.g, c.f, N);
    switch (req.format) {
    case Format::Json: {
        Json arr = Json::array();
        for (const auto& t : types) arr.push_back(to_json(t));
        emit(out, arr);
        break;
    }
    case Format::Csv:
        out << "degree,signature,multiplicity,dim\n";
        for (const auto& t : types)
            out << t.degree << ',' << csv_field(signature_of(t)) << ',' << t.multiplicity << ',' << t.dim << '\n';
        break;
    case Format::Text:
        out << c.g.name() << ", V " << c.f.str(c.g) << ", degree " << N << ": " << types.size() << " K-types\n";
        for (const auto& t : types)
            out << "  " << t.label() << "  weight " << signature_of(t) << "  mult " << t.multiplicity << "  dim "
                << t.dim << '\n';
        break;
    }
    return Ok;
}

int cmd_ratio(const Request& req, std::ostream& out) {
    const Context c = context(req);
    if (req.ktype.empty()) throw ParseError("--ktype is required");
    const KType t = parse_ktype(c.g, c.f, req.ktype);
    const RatioResult res = norm_ratio(c.g, c.f, t, req.conjecture);
    if (!res.complete())
        throw ConjecturalError("the numerator of degree " + std::to_string(res.unknown_numerator_degree) +
                               " is only known conjecturally; pass --conjecture");
    std::optional<Evaluation> ev;
    if (req.lambda) ev = res.ratio.evaluate(*req.lambda);
    if (req.format == Format::Json) {
        Json j;
        j["group"] = c.g.id();
        j["fiber"] = c.f.str(c.g);
        j["ktype"] = to_json(t);
        j["ratio"] = to_json(res.ratio);
        j["text"] = res.ratio.str();
        j["conjectural"] = res.conjectural;
        if (ev) {
            j["lambda"] = req.lambda->str();
            j["value"] = eval_json(*ev, req.eval);
        }
        emit(out, j);
    } else {
        out << res.ratio.str();
        if (res.conjectural) out << "  [conjectural]";
        out << '\n';
        if (ev) {
            out << "at λ=" << req.lambda->str() << ": " << eval_str(*ev);
            if (req.eval && ev->kind == Evaluation::Kind::Value) out << " ≈ " << decimal(ev->value);
            out << '\n';
        }
    }
    return Ok;
}

int cmd_cnorm(const Request& req, std::ostream& out) {
    const Context c = context(req);
    const GammaQuotient q = normalizing_const(c.g, c.f);
    std::optional<Evaluation> ev;
    if (req.lambda && q.is_rational()) ev = q.rational.evaluate(*req.lambda);
    if (req.format == Format::Json) {
        Json j;
        j["group"] = c.g.id();
        j["fiber"] = c.f.str(c.g);
        j["rational"] = to_json(q.rational);
        Json rn = Json::array(), rd = Json::array();
        for (const auto& a : q.residual_num) rn.push_back(a.str());
        for (const auto& a : q.residual_den) rd.push_back(a.str());
        j["gamma_num"] = rn;
        j["gamma_den"] = rd;
        j["text"] = q.str();
        if (ev) {
            j["lambda"] = req.lambda->str();
            j["value"] = eval_json(*ev, req.eval);
        }
        emit(out, j);
    } else {
        out << "c_λ = " << q.str() << '\n';
        if (ev) {
            out << "at λ=" << req.lambda->str() << ": " << eval_str(*ev);
            if (req.eval && ev->kind == Evaluation::Kind::Value) out << " ≈ " << decimal(ev->value);
            out << '\n';
        }
    }
    return Ok;
}

UnitarySet closed_unitary(const Context& c) {
    try {
        return unitary_set(c.g, c.f);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

int cmd_unitary(const Request& req, std::ostream& out) {
    const Context c = context(req);
    const UnitarySet u = closed_unitary(c);
    if (req.format == Format::Json) {
        Json j = to_json(u);
        if (req.lambda) {
            j["lambda"] = req.lambda->str();
            j["contains"] = u.contains(*req.lambda);
        }
        emit(out, j);
    } else {
        out << u.str() << '\n';
        if (req.lambda) out << "λ=" << req.lambda->str() << (u.contains(*req.lambda) ? " is" : " is not") << " in the set\n";
    }
    return Ok;
}

int cmd_filtration(const Request& req, std::ostream& out) {
    const Context c = context(req);
    const Rat& lam = need_lambda(req);
    if (c.g.family == Family::E6) throw ParseError("filtration: no closed forms for E6");
    const bool red = reducible(c.g, c.f, lam);
    Json j;
    j["lambda"] = lam.str();
    j["reducible"] = red;
    j["chain"] = Json::array();
    j["quotient"] = nullptr;
    std::vector<SubquotientInfo> subs;
    if (red) {
        const Filtration fl = filtration(c.g, c.f, lam);
        for (const auto& lv : fl.levels)
            j["chain"].push_back({{"j", lv.j}, {"predicate", lv.predicate}, {"gk_dim", lv.gk_dim}, {"unitary", lv.unitary}});
        j["quotient"] = {{"gk_dim", fl.quotient_gk_dim}, {"unitary", fl.quotient_unitary}};
        subs = subquotient_report(c.g, c.f, lam);
    }
    j["conjectural"] = false;
    if (req.format == Format::Json) {
        emit(out, j);
        return Ok;
    }
    out << c.g.name() << ", V " << c.f.str(c.g) << ", λ=" << lam.str();
    if (!red) {
        out << ": irreducible\n";
        return Ok;
    }
    out << ": reducible\n";
    for (const auto& lv : j["chain"])
        out << "  M_" << lv["j"].get<int>() << ": " << lv["predicate"].get<std::string>() << "  (GK "
            << lv["gk_dim"].get<int>() << (lv["unitary"].get<bool>() ? ", unitary" : "") << ")\n";
    out << "  P/M_b: GK " << j["quotient"]["gk_dim"].get<int>()
        << (j["quotient"]["unitary"].get<bool>() ? ", unitary" : "") << '\n';
    for (const auto& s : subs)
        out << "  " << s.name << ": orbit " << s.orbit << ", GK " << s.gk_dim
            << (s.irreducible ? ", irreducible" : ", subquotient (irreducibility unknown)")
            << (s.unitary ? ", unitary" : "") << '\n';
    return Ok;
}

Json witness_json(const std::optional<ScanWitness>& w) {
    if (!w) return nullptr;
    return {{"ktype", to_json(w->ktype)}, {"value", w->value.str()}};
}

int cmd_scan(const Request& req, std::ostream& out) {
    const Context c = context(req);
    const Rat& lam = need_lambda(req);
    const int N = checked_degree(req, std::min(8, max_degree()));
    const ScanTable table = build_scan_table(c.g, c.f, N, req.conjecture);
    const UnitaryScan us = unitary_scan(table, lam);
    const ReducibleScan rs = reducible_scan(table, lam);
    const auto pole = first_pole_degree(table, lam);
    Json j;
    j["lambda"] = lam.str();
    j["degree"] = N;
    j["unitary"] = {{"compatible", us.compatible}, {"witness", witness_json(us.witness)}};
    j["reducible"] = {{"reducible", rs.reducible}, {"witness", witness_json(rs.witness)}};
    j["first_pole_degree"] = pole ? Json(*pole) : Json(nullptr);
    j["conjectural"] = table.conjectural;
    if (req.format == Format::Json) {
        emit(out, j);
        return Ok;
    }
    out << c.g.name() << ", V " << c.f.str(c.g) << ", λ=" << lam.str() << ", degree ≤ " << N
        << (table.conjectural ? " [conjectural]" : "") << '\n';
    out << "  unitary scan: " << (us.compatible ? "compatible" : "negative coefficient");
    if (us.witness) out << " at " << us.witness->ktype.label() << " (" << us.witness->value.str() << ")";
    out << "\n  reducible scan: " << (rs.reducible ? "pole" : "no pole");
    if (rs.witness) out << " at " << rs.witness->ktype.label() << " (" << rs.witness->value.str() << ")";
    out << '\n';
    return Ok;
}

int cmd_table(const Request& req, std::ostream& out) {
    const Context c = context(req);
    const int N = checked_degree(req, 4);
    const ScanTable table = build_scan_table(c.g, c.f, N, req.conjecture);
    if (!table.complete) throw ConjecturalError("some ratios are only known conjecturally; pass --conjecture");
    Json rows = Json::array();
    if (req.format == Format::Csv) out << "degree,signature,multiplicity,ratio-numerator,ratio-denominator\n";
    for (size_t i = 0; i < table.types.size(); ++i) {
        const KType& t = table.types[i];
        const FactoredFn& r = table.ratios[i].ratio;
        std::string num, den;
        if (req.lambda) {
            const Evaluation ev = r.evaluate(*req.lambda);
            if (ev.kind == Evaluation::Kind::Pole) {
                num = "1";
                den = "0";
            } else if (ev.kind == Evaluation::Kind::Zero) {
                num = "0";
                den = "1";
            } else {
                num = ev.value.num().get_str();
                den = ev.value.den().get_str();
            }
        } else {
            std::tie(num, den) = split_fraction(r);
        }
        switch (req.format) {
        case Format::Csv:
            out << t.degree << ',' << csv_field(signature_of(t)) << ',' << t.multiplicity << ',' << csv_field(num)
                << ',' << csv_field(den) << '\n';
            break;
        case Format::Json:
            rows.push_back({{"degree", t.degree},
                            {"signature", signature_of(t)},
                            {"multiplicity", t.multiplicity},
                            {"ratio_numerator", num},
                            {"ratio_denominator", den}});
            break;
        case Format::Text:
            out << t.degree << "  " << t.label() << "  x" << t.multiplicity << "  " << num << " / " << den << '\n';
            break;
        }
    }
    if (req.format == Format::Json) emit(out, rows);
    return Ok;
}

int cmd_check(const Request& req, std::ostream& out) {
    const auto reports = run_suite(req.suite);
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed;
        arr.push_back(to_json(r));
    }
    if (req.format == Format::Json) {
        emit(out, arr);
    } else {
        for (const auto& r : reports) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
            for (const auto& w : r.witnesses) out << "    " << w << '\n';
        }
    }
    return ok ? Ok : CheckFailed;
}

}  // namespace

GroupSpec parse_group(const std::string& text) {
    const auto colon = text.find(':');
    const std::string fam = trim(text.substr(0, colon));
    const auto kv = colon == std::string::npos ? std::map<std::string, std::string>{} : key_values(text.substr(colon + 1), ',');
    try {
        if (fam == "sp") {
            reject_unknown(kv, {"r"}, "group");
            return GroupSpec::sp(parse_int(need(kv, "r", "sp")));
        }
        if (fam == "su") {
            reject_unknown(kv, {"q", "s"}, "group");
            return GroupSpec::su(parse_int(need(kv, "q", "su")), parse_int(need(kv, "s", "su")));
        }
        if (fam == "sostar") {
            reject_unknown(kv, {"s"}, "group");
            return GroupSpec::sostar(parse_int(need(kv, "s", "sostar")));
        }
        if (fam == "spin") {
            reject_unknown(kv, {"n"}, "group");
            return GroupSpec::spin(parse_int(need(kv, "n", "spin")));
        }
        if (fam == "e6" || fam == "e7") {
            reject_unknown(kv, {}, "group");
            return fam == "e6" ? GroupSpec::e6() : GroupSpec::e7();
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown group '" + text + "'");
}

FiberSpec parse_fiber(const GroupSpec& g, const std::string& text) {
    const auto kv = key_values(text, ',');
    FiberSpec f;
    try {
        switch (g.family) {
        case Family::Sp:
        case Family::E6:
        case Family::E7: {
            reject_unknown(kv, {"k"}, "fiber");
            const int k = kv.count("k") ? parse_int(kv.at("k")) : 0;
            if (g.family == Family::Sp) f = FiberSpec::sp(k);
            else if (g.family == Family::E6) f = FiberSpec::e6(k);
            else if (k != 0) throw ParseError("E7 supports only the scalar fiber");
            break;
        }
        case Family::SU:
            reject_unknown(kv, {"k"}, "fiber");
            f = FiberSpec::su(kv.count("k") ? parse_ints(kv.at("k")) : std::vector<int>{0});
            break;
        case Family::SOStar: {
            reject_unknown(kv, {"k", "kind"}, "fiber");
            FiberKind kind = FiberKind::SymDual;
            if (kv.count("kind")) {
                const std::string& s = kv.at("kind");
                if (s == "dual") kind = FiberKind::SymDual;
                else if (s == "det") kind = FiberKind::SymDet;
                else throw ParseError("fiber kind must be 'dual' or 'det'");
            }
            f = FiberSpec::sostar(kind, kv.count("k") ? parse_int(kv.at("k")) : 0);
            break;
        }
        case Family::Spin: {
            reject_unknown(kv, {"k", "sign"}, "fiber");
            int sign = 1;
            if (kv.count("sign")) {
                const std::string& s = kv.at("sign");
                if (s == "+" || s == "1" || s == "+1") sign = 1;
                else if (s == "-" || s == "-1") sign = -1;
                else throw ParseError("fiber sign must be '+' or '-'");
            }
            f = FiberSpec::spin(kv.count("k") ? parse_half(kv.at("k")) : Half(0), sign);
            break;
        }
        }
        f = normalize(g, f);
        validate(g, f);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return f;
}

KType parse_ktype(const GroupSpec& g, const FiberSpec& f, const std::string& text) {
    const auto kv = key_values(text, ';');
    reject_unknown(kv, {"m", "kappa", "l", "n"}, "ktype");
    std::optional<Partition> m, n;
    std::optional<Composition> kappa;
    std::optional<Half> l;
    if (kv.count("m")) m = parse_ints(kv.at("m"));
    if (kv.count("n")) n = parse_ints(kv.at("n"));
    if (kv.count("kappa")) kappa = parse_ints(kv.at("kappa"));
    if (kv.count("l")) l = parse_half(kv.at("l"));
    auto sum = [](const std::vector<int>& v) {
        long s = 0;
        for (int x : v) s += x;
        return s;
    };
    long degree;
    if (m) {
        degree = sum(*m);
    } else if (g.family == Family::SU && n) {
        degree = sum(*n) - sum(f.kvec);
    } else {
        throw ParseError("--ktype needs m= (or n= for SU)");
    }
    if (degree < 0 || degree > max_degree()) throw ParseError("--ktype degree out of range");
    auto pad_eq = [](std::vector<int> a, std::vector<int> b) {
        const size_t len = std::max(a.size(), b.size());
        a.resize(len, 0);
        b.resize(len, 0);
        return a == b;
    };
    std::vector<KType> hits;
    for (const auto& t : decompose(g, f, static_cast<int>(degree))) {
        if (m && !pad_eq(*m, t.m)) continue;
        if (n && !pad_eq(*n, t.n)) continue;
        if (kappa && !pad_eq(*kappa, t.kappa)) continue;
        if (l && t.l != l) continue;
        hits.push_back(t);
    }
    if (hits.empty()) throw ParseError("no K-type matches '" + text + "'");
    if (hits.size() > 1) throw ParseError("'" + text + "' matches " + std::to_string(hits.size()) + " K-types");
    return hits.front();
}

Json to_json(const KType& t) {
    Json j;
    j["family"] = to_string(t.family);
    j["degree"] = t.degree;
    j["m"] = t.m;
    j["kappa"] = t.kappa;
    j["l"] = t.l ? Json(t.l->str()) : Json(nullptr);
    j["n"] = t.n;
    j["weight"] = half_list(t.weight);
    j["weight_q"] = half_list(t.weight_q);
    j["m0"] = t.m0 ? Json(t.m0->str()) : Json(nullptr);
    j["multiplicity"] = t.multiplicity;
    j["dim"] = t.dim;
    return j;
}

KType ktype_from_json(const Json& j) {
    static const std::map<std::string, Family> families = {{"SP", Family::Sp},         {"SU", Family::SU},
                                                           {"SOSTAR", Family::SOStar}, {"SPIN", Family::Spin},
                                                           {"E6", Family::E6},         {"E7", Family::E7}};
    auto halves = [](const std::string& s) {
        Signature out;
        if (s.empty()) return out;
        for (const auto& tok : split(s, ',')) out.push_back(Half::parse(tok));
        return out;
    };
    KType t;
    const auto fam = families.find(j.at("family").get<std::string>());
    if (fam == families.end()) throw ParseError("unknown family in K-type JSON");
    t.family = fam->second;
    t.degree = j.at("degree").get<int>();
    t.m = j.at("m").get<Partition>();
    t.kappa = j.at("kappa").get<Composition>();
    if (!j.at("l").is_null()) t.l = Half::parse(j.at("l").get<std::string>());
    t.n = j.at("n").get<Partition>();
    t.weight = halves(j.at("weight").get<std::string>());
    t.weight_q = halves(j.at("weight_q").get<std::string>());
    if (!j.at("m0").is_null()) t.m0 = Rat::parse(j.at("m0").get<std::string>());
    t.multiplicity = j.at("multiplicity").get<long long>();
    t.dim = j.at("dim").get<long long>();
    return t;
}

Json to_json(const FactoredFn& f) {
    const FactoredFn s = f.simplified();
    return {{"constant", s.constant().str()}, {"num", multiset_json(s.num())}, {"den", multiset_json(s.den())}};
}

Json to_json(const UnitarySet& u) {
    Json d = Json::array();
    for (const auto& x : u.discrete) d.push_back(x.str());
    return {{"continuous_min", u.continuous_min.str()}, {"discrete", d}};
}

Json to_json(const CheckReport& c) {
    return {{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}};
}

int max_degree() {
    const char* env = std::getenv("HWNORM_MAX_DEGREE");
    if (!env || !*env) return 12;
    try {
        return std::max(0, parse_int(env));
    } catch (const ParseError&) {
        return 12;
    }
}

std::vector<Config> standard_configs() {
    using K = FiberKind;
    return {
        {GroupSpec::sp(2), FiberSpec::sp(0)},
        {GroupSpec::sp(2), FiberSpec::sp(1)},
        {GroupSpec::sp(3), FiberSpec::sp(2)},
        {GroupSpec::su(2, 2), FiberSpec::su({2, 1})},
        {GroupSpec::su(1, 3), FiberSpec::su({1, 1, 0})},
        {GroupSpec::sostar(4), FiberSpec::sostar(K::SymDual, 2)},
        {GroupSpec::sostar(4), FiberSpec::sostar(K::SymDet, 2)},
        {GroupSpec::sostar(5), FiberSpec::sostar(K::SymDual, 1)},
        {GroupSpec::sostar(5), FiberSpec::sostar(K::SymDet, 1)},
        {GroupSpec::spin(6), FiberSpec::spin(Half(1), 1)},
        {GroupSpec::spin(6), FiberSpec::spin(Half(1), -1)},
        {GroupSpec::spin(7), FiberSpec::spin(Half::from_doubled(1))},
        {GroupSpec::e6(), FiberSpec::e6(0)},
        {GroupSpec::e6(), FiberSpec::e6(1), true},
        {GroupSpec::e7(), FiberSpec::scalar()},
    };
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"graded_dim", "two_form",   "e6_recurrence", "su11_integral",
                                                   "embedding",  "gamma_poch", "all"};
    return names;
}

std::vector<CheckReport> run_suite(const std::string& name) {
    const bool all = name == "all";
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw ParseError("unknown suite '" + name + "'");
    std::vector<CheckReport> out;
    if (all || name == "graded_dim")
        for (const auto& c : standard_configs()) out.push_back(graded_dim_check(c.group, c.fiber, 6));
    if (all || name == "two_form")
        for (const auto& c : standard_configs()) out.push_back(two_form_check(c.group, c.fiber, 6, c.conjecture));
    if (all || name == "e6_recurrence")
        for (int k = 0; k <= 3; ++k) out.push_back(e6_recurrence_check(k, {Rat(13), Rat(27, 2), Rat(15)}));
    if (all || name == "su11_integral")
        for (long lam : {3, 4}) out.push_back(su11_integral_check(Rat(lam), 5, 1e-6));
    if (all || name == "embedding")
        for (int r = 1; r <= 2; ++r)
            for (int k = 0; k <= 2; ++k) out.push_back(embedding_check(r, k, 4));
    if (all || name == "gamma_poch") {
        const double tol = 1e-9;
        out.push_back(gamma_poch_numeric_check(GroupSpec::sp(2), Rat(5), {2, 1}, tol));
        out.push_back(gamma_poch_numeric_check(GroupSpec::sp(2), Rat(5), {0, 0}, tol));
        out.push_back(gamma_poch_numeric_check(GroupSpec::e7(), Rat(20), {1, 1, 1}, tol));
        out.push_back(gamma_poch_numeric_check(GroupSpec::su(2, 3), Rat(7, 2), {3, 1}, tol));
        out.push_back(gamma_poch_numeric_check(GroupSpec::sostar(5), Rat(9), {2, 2}, tol));
        out.push_back(gamma_poch_numeric_check(GroupSpec::spin(7), Rat(11, 2), {4, 1}, tol));
        out.push_back(gamma_poch_numeric_check(GroupSpec::e6(), Rat(13), {3, 2}, tol));
    }
    return out;
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
    try {
        switch (req.command) {
        case Command::Decompose: return cmd_decompose(req, out);
        case Command::Ratio: return cmd_ratio(req, out);
        case Command::Cnorm: return cmd_cnorm(req, out);
        case Command::Unitary: return cmd_unitary(req, out);
        case Command::Filtration: return cmd_filtration(req, out);
        case Command::Scan: return cmd_scan(req, out);
        case Command::Check: return cmd_check(req, out);
        case Command::Table: return cmd_table(req, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return BadRequest;
    } catch (const ConjecturalError& e) {
        err << "error: " << e.what() << '\n';
        return Conjectural;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return BadRequest;
    }
    return BadRequest;
}

int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, Command> commands = {
        {"decompose", Command::Decompose}, {"ratio", Command::Ratio},
        {"cnorm", Command::Cnorm},         {"unitary", Command::Unitary},
        {"filtration", Command::Filtration}, {"scan", Command::Scan},
        {"check", Command::Check},         {"table", Command::Table}};
    static const std::map<std::string, Format> formats = {
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

    CLI::App app{"Norms of holomorphic discrete series K-types"};
    app.name("hwnorm");
    Request req;
    std::string lambda;
    std::optional<int> degree;
    app.add_option("command", req.command, "Subcommand")
        ->required()
        ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
    app.add_option("--group", req.group, "Group, e.g. sp:r=2, su:q=2,s=3, sostar:s=5, spin:n=6, e6, e7");
    app.add_option("--fiber", req.fiber, "Minimal K-type, e.g. k=1, k=2,1,0, kind=det,k=2, k=1/2,sign=-");
    app.add_option("--lambda", lambda, "Parameter λ as p or p/q");
    app.add_option("--degree", degree, "Polynomial degree");
    app.add_option("--ktype", req.ktype, "K-type selector, e.g. m=2,1;kappa=1,0");
    app.add_option("--format", req.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
    app.add_flag("--conjecture", req.conjecture, "Use conjectural E6 numerators");
    app.add_flag("--eval", req.eval, "Also print decimal approximations");
    app.add_option("--suite", req.suite, "Oracle suite for check");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return BadRequest;
    }
    if (degree) {
        req.degree = *degree;
        req.degree_given = true;
    }
    if (!lambda.empty()) {
        try {
            req.lambda = parse_rat(lambda);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << '\n';
            return BadRequest;
        }
    }
    return run(req, out, err);
}

}  // namespace hwn::cli
