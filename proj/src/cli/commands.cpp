#include "expmat/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "expmat/equiv.hpp"
#include "expmat/hopf.hpp"
#include "expmat/modrep.hpp"

namespace expmat::cli {

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"verify", "build",   "factor", "hopf-check", "project",
                                                "lift",   "act",     "orbits", "equiv",      "rep-eval",
                                                "pi",     "pair",    "unpair", "enumerate"};
    return names;
}

namespace {

struct Ctx {
    const JobSpec& job;
    Field field;
    Json& input;   // canonicalized echo of the payload
    Json& result;  // command output
};

using Handler = std::function<int(Ctx&)>;

// ------------------------------------------------------------ helpers

Json certificate_json(const ExpCertificate& c) {
    const bool at_zero = c.reason == ExpCertificate::Reason::NotIdentityAtZero;
    return Json{{"reason", at_zero ? "not_identity_at_zero" : "functional_equation"},
                {"entry", Json::array({c.row + 1, c.col + 1})},
                {"product", to_json(c.product)},
                {"expected", to_json(c.expected)},
                {"difference", to_json(c.difference)}};
}

std::uint64_t uint_member(const Json& payload, const char* key) {
    const Json& v = member(payload, key);
    if (!is_non_negative_int(v)) throw MalformedInput(std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

MatPoly read_matrix(Ctx& c, const char* key) {
    MatPoly a = poly_matrix_from_json(c.field, member(c.job.payload, key));
    c.input[key] = to_json(a);
    return a;
}

ExpMat read_exp(Ctx& c, const char* key) { return ExpMat::make(read_matrix(c, key)); }

NilTuple read_tuple(Ctx& c, const char* key) {
    NilTuple t = tuple_from_json(c.field, member(c.job.payload, key));
    c.input[key] = to_json(t);
    return t;
}

NilTuple read_valid_tuple(Ctx& c, const char* key) {
    NilTuple t = read_tuple(c, key);
    return NilTuple::make(t.field(), t.size(), t.mats());
}

std::uint64_t action_q(const Ctx& c) {
    if (c.job.q) return *c.job.q;
    if (auto it = c.job.payload.find("q"); it != c.job.payload.end()) return uint_member(c.job.payload, "q");
    if (!c.field.is_finite()) throw NeedsFiniteField("projective commands need a finite field or --q");
    return *c.field.order();
}

// ------------------------------------------------------------ commands

int cmd_verify(Ctx& c) {
    const ExpCheck chk = verify_exponential(read_matrix(c, "matrix"));
    c.result["exponential"] = chk.exponential;
    if (!chk) {
        c.result["certificate"] = certificate_json(*chk.certificate);
        return kFalse;
    }
    return kTrue;
}

int cmd_build(Ctx& c) {
    const ExpMat a = build_from_tuple(read_valid_tuple(c, "tuple"));
    c.result["matrix"] = to_json(a.matrix());
    c.result["det"] = to_json(det(a.matrix()));
    return kTrue;
}

int cmd_factor(Ctx& c) {
    const NilTuple t = factor(read_exp(c, "matrix"));
    c.result["tuple"] = to_json(t);
    return kTrue;
}

int cmd_hopf_check(Ctx& c) {
    MatPoly a = read_matrix(c, "matrix");
    std::optional<HopfHom> h;
    try {
        h = to_hopf(std::move(a));
    } catch (const DetNotUnit& e) {
        c.result["det_unit"] = false;
        c.result["hopf_hom"] = false;
        return kFalse;
    }
    c.result["det_unit"] = true;
    c.result["counit"] = check_counit(*h);
    c.result["comultiplication"] = check_comultiplication(*h);
    c.result["antipode"] = check_antipode(*h);
    const bool hom = is_hopf_hom(*h);
    c.result["hopf_hom"] = hom;
    return hom ? kTrue : kFalse;
}

int cmd_project(Ctx& c) {
    c.result["class"] = to_json(project(read_exp(c, "matrix")).rep());
    return kTrue;
}

int cmd_lift(Ctx& c) {
    c.result["matrix"] = to_json(lift(read_matrix(c, "class")).matrix());
    return kTrue;
}

int cmd_act(Ctx& c) {
    const GaAction mu(read_exp(c, "matrix"));
    const std::uint64_t q = action_q(c);
    const Field fq = action_field(mu, q);
    const Elem t = elem_from_json(fq, member(c.job.payload, "t"));
    const ProjPoint x = point_from_json(fq, member(c.job.payload, "point"));
    c.input["q"] = q;
    c.input["t"] = to_json(t);
    c.input["point"] = to_json(x);
    c.result["image"] = to_json(act(mu, t, x));
    return kTrue;
}

int cmd_orbits(Ctx& c) {
    const GaAction mu(read_exp(c, "matrix"));
    const std::uint64_t q = action_q(c);
    c.input["q"] = q;
    Json orbs = Json::array();
    for (const auto& orbit : orbits(mu, q)) {
        Json o = Json::array();
        for (const ProjPoint& x : orbit) o.push_back(to_json(x));
        orbs.push_back(std::move(o));
    }
    Json fixed = Json::array();
    for (const ProjPoint& x : fixed_points(mu, q)) fixed.push_back(to_json(x));
    c.result["orbits"] = std::move(orbs);
    c.result["fixed_points"] = std::move(fixed);
    return kTrue;
}

int cmd_equiv(Ctx& c) {
    const ExpMat a1 = read_exp(c, "a1");
    const ExpMat a2 = read_exp(c, "a2");
    const Json& pl = c.job.payload;
    if (pl.contains("witness")) {
        const MatConst pm = const_matrix_from_json(c.field, pl["witness"]);
        c.input["witness"] = to_json(pm);
        const Witness w = Witness::make(pm);
        bool eq = false;
        if (pl.contains("level")) {
            if (!pl["level"].is_string()) throw MalformedInput("'level' must be one of \"a\" .. \"f\"");
            Level lv{};
            try {
                lv = parse_level(pl["level"].get<std::string>());
            } catch (const Error& e) {
                throw MalformedInput(e.what());
            }
            c.input["level"] = std::string(1, level_letter(lv));
            eq = transport_equiv(lv, a1, a2, w);
        } else {
            eq = check_equiv(a1, a2, w);
        }
        c.result["equivalent"] = eq;
        return eq ? kTrue : kFalse;
    }
    SearchOptions opts;
    if (c.job.budget) opts.budget = *c.job.budget;
    if (pl.contains("extension")) {
        const std::uint64_t k = uint_member(pl, "extension");
        if (k == 0 || k > 64) throw MalformedInput("'extension' must be in 1..64");
        opts.extension = static_cast<unsigned>(k);
        c.input["extension"] = k;
    }
    const Field search_field = c.field.extension(opts.extension);
    const std::uint64_t order = gl_order(search_field, a1.size());
    c.result["search_field"] = to_json(search_field);
    c.result["budget"] = opts.budget;
    c.result["exhaustive"] = order <= opts.budget;
    const std::optional<Witness> w = search_equiv(a1, a2, opts);
    c.result["equivalent"] = w.has_value();
    if (w) {
        c.result["witness"] = to_json(w->matrix());
        return kTrue;
    }
    return kFalse;
}

int cmd_rep_eval(Ctx& c) {
    const Rep rep(read_tuple(c, "rep"));
    const Json& aj = member(c.job.payload, "a");
    if (!aj.is_array()) throw MalformedInput("'a' must be an array of residues");
    const std::uint64_t p = c.field.characteristic();
    std::vector<std::uint64_t> a;
    for (const Json& x : aj) {
        if (!is_non_negative_int(x) || (p != 0 && x.get<std::uint64_t>() >= p))
            throw MalformedInput("residues must be integers in 0 .. p-1");
        a.push_back(x.get<std::uint64_t>());
    }
    c.input["a"] = a;
    c.result["value"] = to_json(rho_eval(rep, a));
    c.result["valid_tuple"] = rep.tuple().valid();
    bool hom = true;
    try {
        hom = verify_hom(rep);
        c.result["homomorphism"] = hom;
    } catch (const BudgetExceeded&) {
        c.result["homomorphism"] = nullptr;
    }
    return hom ? kTrue : kFalse;
}

int cmd_pi(Ctx& c) {
    const Rep rep(read_valid_tuple(c, "rep"));
    c.result["matrix"] = to_json(pi_map(rep).matrix());
    c.result["l"] = l_of(rep);
    c.result["minimal"] = is_minimal(rep);
    c.result["rho_min"] = to_json(rho_min(rep).tuple());
    return kTrue;
}

int cmd_pair(Ctx& c) {
    const RepPair pr = to_pair(Rep(read_valid_tuple(c, "rep")));
    c.result["matrix"] = to_json(pr.matrix.matrix());
    c.result["padding"] = pr.padding;
    return kTrue;
}

int cmd_unpair(Ctx& c) {
    const ExpMat a = read_exp(c, "matrix");
    const std::uint64_t pad = uint_member(c.job.payload, "padding");
    c.input["padding"] = pad;
    c.result["rep"] = to_json(from_pair(a, pad).tuple());
    return kTrue;
}

int cmd_enumerate(Ctx& c) {
    auto pick = [&](const std::optional<std::size_t>& flag, const char* key) -> std::size_t {
        if (flag) return *flag;
        if (c.job.payload.contains(key)) return uint_member(c.job.payload, key);
        throw MalformedInput(std::string("enumerate needs --") + key);
    };
    const std::size_t n = pick(c.job.n, "n");
    const std::size_t r = pick(c.job.r, "r");
    if (n == 0) throw MalformedInput("--n must be at least 1");
    c.input["n"] = n;
    c.input["r"] = r;
    const std::vector<NilTuple> all = enumerate_tuples(c.field, n, r);
    std::size_t minimal = 0;
    for (const NilTuple& t : all)
        if (is_minimal(Rep(t))) ++minimal;
    c.result["tuples"] = all.size();
    c.result["minimal"] = minimal;
    return kTrue;
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"verify", cmd_verify},   {"build", cmd_build},       {"factor", cmd_factor},   {"hopf-check", cmd_hopf_check},
        {"project", cmd_project}, {"lift", cmd_lift},         {"act", cmd_act},         {"orbits", cmd_orbits},
        {"equiv", cmd_equiv},     {"rep-eval", cmd_rep_eval}, {"pi", cmd_pi},           {"pair", cmd_pair},
        {"unpair", cmd_unpair},   {"enumerate", cmd_enumerate}};
    return h;
}

Field resolve_field(const JobSpec& job) {
    std::optional<Field> from_payload, from_flag;
    if (job.payload.is_object() && job.payload.contains("field")) from_payload = field_from_json(job.payload["field"]);
    try {
        if (job.field) from_flag = Field::parse(*job.field);
        else if (job.p) from_flag = Field::prime(*job.p);
    } catch (const BadField& e) {
        throw MalformedInput(e.what());
    }
    if (from_payload && from_flag && *from_payload != *from_flag)
        throw MalformedInput("--field disagrees with the payload's field");
    if (from_payload) return *from_payload;
    if (from_flag) return *from_flag;
    throw MalformedInput("no field given (use --field p[,m] or a \"field\" member)");
}

const char* error_kind(const std::exception& e) {
#define EXPMAT_KIND(T) \
    if (dynamic_cast<const T*>(&e)) return #T;
    EXPMAT_KIND(NotExponential)
    EXPMAT_KIND(FieldMismatch)
    EXPMAT_KIND(BadField)
    EXPMAT_KIND(SizeMismatch)
    EXPMAT_KIND(DivisionByZero)
    EXPMAT_KIND(NotUnimodular)
    EXPMAT_KIND(NotNilpotent)
    EXPMAT_KIND(NotCommuting)
    EXPMAT_KIND(FactorResidue)
    EXPMAT_KIND(DetNotUnit)
    EXPMAT_KIND(NotScalarAtZero)
    EXPMAT_KIND(SingularWitness)
    EXPMAT_KIND(BudgetExceeded)
    EXPMAT_KIND(LengthMismatch)
    EXPMAT_KIND(NeedsFiniteField)
    EXPMAT_KIND(MalformedInput)
#undef EXPMAT_KIND
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return "MalformedInput";
    return "Error";
}

Json error_json(const std::exception& e) { return Json{{"kind", error_kind(e)}, {"message", e.what()}}; }

}  // namespace

Report run(const JobSpec& job) {
    Report rep;
    Json& body = rep.body;
    body["command"] = job.command;
    Json input = Json::object();
    Json result = Json::object();
    auto finish = [&](int code) {
        body["input"] = std::move(input);
        for (auto& [k, v] : result.items()) body[k] = v;
        rep.exit_code = code;
        return rep;
    };
    try {
        auto it = handlers().find(job.command);
        if (it == handlers().end()) throw MalformedInput("unknown command '" + job.command + "'");
        if (!job.payload.is_object()) throw MalformedInput("payload must be a JSON object");
        const Field f = resolve_field(job);
        body["field"] = to_json(f);
        Ctx ctx{job, f, input, result};
        return finish(it->second(ctx));
    } catch (const NotExponential& e) {
        result["exponential"] = false;
        result["certificate"] = certificate_json(e.certificate());
        result["error"] = error_json(e);
        return finish(kFalse);
    } catch (const BudgetExceeded& e) {
        result["error"] = error_json(e);
        return finish(kBudget);
    } catch (const MalformedInput& e) {
        result["error"] = error_json(e);
        return finish(kMalformed);
    } catch (const nlohmann::json::exception& e) {
        result["error"] = error_json(e);
        return finish(kMalformed);
    } catch (const BadField& e) {
        result["error"] = error_json(e);
        return finish(kMalformed);
    } catch (const SizeMismatch& e) {
        result["error"] = error_json(e);
        return finish(kMalformed);
    } catch (const FieldMismatch& e) {
        result["error"] = error_json(e);
        return finish(kMalformed);
    } catch (const LengthMismatch& e) {
        result["error"] = error_json(e);
        return finish(kMalformed);
    } catch (const NeedsFiniteField& e) {
        result["error"] = error_json(e);
        return finish(kMalformed);
    } catch (const Error& e) {
        // NotNilpotent, NotCommuting, DetNotUnit, NotScalarAtZero, SingularWitness, ...
        result["error"] = error_json(e);
        return finish(kFalse);
    }
}

std::string render_json(const Report& report) { return report.body.dump() + "\n"; }

namespace {

bool is_scalar_row(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const Json& x : j)
        if (x.is_array() || x.is_object()) return false;
    return true;
}

void table_value(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
    const std::string pad(indent, ' ');
    if (is_scalar_row(v)) {
        os << pad << key << ": " << v.dump() << "\n";
        return;
    }
    os << pad << key << ":\n";
    if (v.is_object() && v.contains("entries") && v.contains("n")) {
        for (const Json& row : v["entries"]) {
            os << pad << "  ";
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "  " : "") << row[j].dump();
            os << "\n";
        }
        return;
    }
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) table_value(os, k, x, indent + 2);
        return;
    }
    std::size_t i = 0;
    for (const Json& x : v) table_value(os, "[" + std::to_string(i++) + "]", x, indent + 2);
}

}  // namespace

std::string render_table(const Report& report) {
    std::ostringstream os;
    for (const auto& [k, v] : report.body.items()) table_value(os, k, v, 0);
    os << "exit: " << report.exit_code << "\n";
    return os.str();
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exponential matrices over k[T]: verification, factorization and the related correspondences", "expmat"};
    JobSpec job;
    std::string input_path;
    std::string format = "json";
    std::string field;
    std::uint64_t budget = 0, q = 0, p = 0;
    std::size_t n = 0, r = 0;
    app.add_option("command", job.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
    auto* o_field = app.add_option("--field", field, "Coefficient field as p[,m]; p = 0 for Q");
    auto* o_input = app.add_option("--input", input_path, "JSON payload file, or - for stdin");
    auto* o_budget = app.add_option("--budget", budget, "Candidate budget for equiv search");
    auto* o_q = app.add_option("--q", q, "Size of the finite field for act/orbits");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    auto* o_n = app.add_option("--n", n, "Matrix size (enumerate)");
    auto* o_p = app.add_option("--p", p, "Characteristic (enumerate)");
    auto* o_r = app.add_option("--r", r, "Tuple length (enumerate)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kTrue : kMalformed;
    }
    if (*o_field) job.field = field;
    if (*o_budget) job.budget = budget;
    if (*o_q) job.q = q;
    if (*o_n) job.n = n;
    if (*o_p) job.p = p;
    if (*o_r) job.r = r;

    Report report;
    bool have_report = false;
    const bool wants_input = *o_input || job.command != "enumerate";
    if (wants_input) {
        std::string text;
        if (!*o_input || input_path == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream f(input_path, std::ios::binary);
            if (!f) {
                report.exit_code = kMalformed;
                report.body = Json{{"command", job.command},
                                   {"error", {{"kind", "MalformedInput"}, {"message", "cannot read " + input_path}}}};
                have_report = true;
            } else {
                text.assign(std::istreambuf_iterator<char>(f), {});
            }
        }
        if (!have_report) {
            try {
                job.payload = Json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                report.exit_code = kMalformed;
                report.body = Json{{"command", job.command}, {"error", {{"kind", "MalformedInput"}, {"message", e.what()}}}};
                have_report = true;
            }
        }
    }
    if (!have_report) report = run(job);
    out << (format == "table" ? render_table(report) : render_json(report));
    out.flush();
    return report.exit_code;
}

}  // namespace expmat::cli
