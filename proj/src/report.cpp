#include "leibhom/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "leibhom/algebra_io.hpp"
#include "leibhom/complexes.hpp"
#include "leibhom/eulerian.hpp"
#include "leibhom/hopf.hpp"
#include "leibhom/random.hpp"

namespace leibhom {

namespace {

using Record = nlohmann::ordered_json;

const std::map<std::string, Command> &command_table()
{
    static const std::map<std::string, Command> table{
        {"validate", Command::Validate},       {"hl", Command::Hl},
        {"li", Command::Li},                   {"conjecture1", Command::Conjecture1},
        {"conjecture2", Command::Conjecture2}, {"wigner", Command::Wigner},
        {"export", Command::Export},
    };
    return table;
}

std::string format_format(OutputFormat f)
{
    switch (f) {
    case OutputFormat::Json:
        return "json";
    case OutputFormat::Csv:
        return "csv";
    default:
        return "text";
    }
}

std::string format_element(const LeibnizAlgebra &a, const std::vector<Scalar> &coords)
{
    std::string out;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const Scalar &c = coords[k];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Scalar mag = negative ? -c : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!mag.is_one()) {
            out += mag.to_string() + "*";
        }
        out += a.basis_names()[k];
    }
    return out.empty() ? "0" : out;
}

std::string format_cycles(const RationalMatrix &m)
{
    std::string out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        out += c == 0 ? "[" : " [";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out += (r == 0 ? "" : ",") + m(r, c).to_string();
        }
        out += "]";
    }
    return out;
}

LeibnizAlgebra load_input(const std::string &input)
{
    if (input.empty()) {
        throw InputError("this command needs an INPUT (a JSON file or builtin:<name>)");
    }
    const std::string prefix = "builtin:";
    if (input.rfind(prefix, 0) == 0) {
        return builtin(input.substr(prefix.size()));
    }
    return algebra_from_file(input);
}

LeibnizAlgebra load_valid(const std::string &input)
{
    LeibnizAlgebra a = load_input(input);
    const auto violations = validate(a);
    if (!violations.empty()) {
        throw InputError("algebra '" + a.name() + "' violates the Leibniz identity on " +
                         std::to_string(violations.size()) + " basis triple(s); run 'validate' for details");
    }
    return a;
}

std::vector<ActionConvention> conventions(const std::string &action)
{
    if (action == "signed") {
        return {ActionConvention::Signed};
    }
    if (action == "unsigned") {
        return {ActionConvention::Unsigned};
    }
    if (action == "both") {
        return {ActionConvention::Unsigned, ActionConvention::Signed};
    }
    throw InputError("--action must be signed, unsigned or both, got '" + action + "'");
}

void homology_records(Report &report, const std::string &complex, const HomologyReport &h)
{
    for (const auto &row : h.rows) {
        Record r;
        r["kind"] = "homology";
        r["complex"] = complex;
        r["degree"] = row.degree;
        r["chain_dim"] = row.chain_dim;
        r["boundary_rank"] = row.boundary_rank;
        r["kernel_dim"] = row.kernel_dim;
        r["homology_dim"] = row.homology_dim;
        if (row.cycles) {
            r["cycles"] = format_cycles(*row.cycles);
        }
        report.results.push_back(r);
    }
}

void run_validate(const RunConfig &cfg, Report &report)
{
    const LeibnizAlgebra a = load_input(cfg.input);
    const auto violations = validate(a);
    Record summary;
    summary["kind"] = "validation";
    summary["algebra"] = a.name();
    summary["dimension"] = a.dimension();
    summary["valid"] = violations.empty();
    summary["violations"] = violations.size();
    report.results.push_back(summary);
    const auto &names = a.basis_names();
    for (const auto &v : violations) {
        Record r;
        r["kind"] = "violation";
        r["i"] = names[v.i];
        r["j"] = names[v.j];
        r["k"] = names[v.k];
        r["residual"] = format_element(a, v.residual.coords);
        report.results.push_back(r);
    }
    report.exit_code = violations.empty() ? kSuccess : kCheckFailed;
}

void run_hl(const RunConfig &cfg, Report &report)
{
    const LeibnizAlgebra a = load_valid(cfg.input);
    homology_records(report, "HL", hl_homology(a, cfg.degree, cfg.limits, cfg.representatives));
}

void run_li(const RunConfig &cfg, Report &report)
{
    const LeibnizAlgebra a = load_valid(cfg.input);
    const auto h = li_homology(a, cfg.degree, cfg.limits, cfg.representatives);
    homology_records(report, "Li", h);
    const std::size_t lie_dim = liezation(a).quotient.dimension();
    const std::size_t li1 = h.rows.front().homology_dim;
    Record r;
    r["kind"] = "liezation_check";
    r["liezation_dim"] = lie_dim;
    r["li1_dim"] = li1;
    r["equal"] = lie_dim == li1;
    report.results.push_back(r);
    if (lie_dim != li1) {
        report.exit_code = kCheckFailed;
    }
}

void run_conjecture1(const RunConfig &cfg, Report &report)
{
    const std::size_t g = cfg.generators;
    const unsigned top = cfg.weight;
    const LeibnizAlgebra a = free_leibniz(g, top, cfg.limits);

    // Liezation of a free Leibniz algebra is free Lie: its weight pieces
    // must have Witt-number dimensions.
    const auto lie = liezation(a).quotient;
    std::vector<std::size_t> lie_by_weight(top + 1, 0);
    for (unsigned w : *lie.weights()) {
        ++lie_by_weight[w];
    }

    std::vector<Record> homology_rows;
    std::vector<Record> checks;
    std::vector<Record> verdicts;
    for (unsigned w = 1; w <= top; ++w) {
        const std::size_t n_max = std::min<std::size_t>(cfg.degree, w);
        const auto h = weight_graded_li(a, n_max, w, cfg.limits);
        for (const auto &row : h.rows) {
            Record r;
            r["kind"] = "weight_homology";
            r["degree"] = row.degree;
            r["weight"] = w;
            r["chain_dim"] = row.chain_dim;
            r["boundary_rank"] = row.boundary_rank;
            r["homology_dim"] = row.homology_dim;
            homology_rows.push_back(r);
        }
        const std::size_t li1 = h.rows.front().homology_dim;
        const std::size_t witt = witt_number(g, w);
        Record check;
        check["kind"] = "witt_check";
        check["weight"] = w;
        check["li1_dim"] = li1;
        check["liezation_dim"] = lie_by_weight[w];
        check["witt"] = witt;
        check["equal"] = li1 == witt && lie_by_weight[w] == witt;
        checks.push_back(check);
        if (!check["equal"].get<bool>()) {
            report.exit_code = kCheckFailed;
        }
        for (const auto &row : h.rows) {
            if (row.degree < 2) {
                continue;
            }
            Record v;
            v["kind"] = "verdict";
            v["degree"] = row.degree;
            v["weight"] = w;
            v["verdict"] = row.homology_dim == 0 ? "vanishes" : "NONZERO (counterexample candidate)";
            v["scope"] = "tested range only";
            verdicts.push_back(v);
        }
    }
    for (const auto *group : {&homology_rows, &checks, &verdicts}) {
        for (const auto &r : *group) {
            report.results.push_back(r);
        }
    }
}

void run_conjecture2(const RunConfig &cfg, Report &report)
{
    const LeibnizAlgebra a = load_valid(cfg.input);
    const auto convs = conventions(cfg.action);
    if (cfg.degree < 2) {
        throw InputError("conjecture2 needs --degree >= 2");
    }
    std::map<std::size_t, std::vector<GroupAlgebraElement>> families;
    for (std::size_t n = 1; n <= cfg.degree; ++n) {
        auto family = eulerian_family(n);
        if (cfg.corrupt_idempotent && n == cfg.degree) {
            family.front().add(Permutation::identity(n), Scalar(1));
        }
        const auto cert = certify(family);
        Record r;
        r["kind"] = "certification";
        r["degree"] = n;
        r["complete"] = cert.complete;
        r["orthogonal"] = cert.orthogonal;
        report.results.push_back(r);
        if (!cert.ok()) {
            Record abort;
            abort["kind"] = "aborted";
            abort["reason"] = "idempotent certification failed in degree " + std::to_string(n);
            report.results.push_back(abort);
            report.exit_code = kCheckFailed;
            return;
        }
        families.emplace(n, std::move(family));
    }
    for (std::size_t n = 2; n <= cfg.degree; ++n) {
        for (ActionConvention conv : convs) {
            for (const auto &v : conjecture2_check(a, n, conv, families.at(n), families.at(n - 1), cfg.limits)) {
                Record r;
                r["kind"] = "conjecture2";
                r["degree"] = n;
                r["i"] = v.i;
                r["convention"] = to_string(conv);
                r["image_dim"] = v.image_dim;
                r["target_dim"] = v.target_dim;
                r["contained"] = v.contained;
                r["scope"] = "tested range only";
                report.results.push_back(r);
            }
        }
    }
    // Exploratory: does the signed image of e_n^(1) coincide with L(V,1)_n?
    for (std::size_t n = 1; n <= cfg.degree; ++n) {
        const RationalMatrix action =
            action_matrix(families.at(n).front(), a.dimension(), ActionConvention::Signed, cfg.limits);
        const RationalMatrix image = column_space(action);
        const auto lie = lie_basis(a.dimension(), n, cfg.limits);
        Record r;
        r["kind"] = "lie_link";
        r["degree"] = n;
        r["signed_e1_rank"] = image.cols();
        r["lie_dim"] = lie->dimension();
        r["equal"] = image == lie->inclusion;
        // The transpose is the action of the inverse permutations.
        r["transpose_equal"] = column_space(action.transpose()) == lie->inclusion;
        report.results.push_back(r);
    }
}

void run_wigner(const RunConfig &cfg, Report &report)
{
    const std::size_t d = cfg.generators;
    if (d == 0) {
        throw InputError("wigner needs --generators >= 1 (the dimension of V)");
    }
    SplitMix64 rng(cfg.seed);
    bool all_pass = true;
    for (std::size_t n = 1; n <= cfg.degree; ++n) {
        std::size_t passed = 0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const RationalMatrix dm = random_matrix(rng, d, d);
            const TensorElement omega = random_tensor(rng, d, n);
            if (wigner_check(dm, omega)) {
                ++passed;
            } else {
                Record w;
                w["kind"] = "witness";
                w["check"] = "wigner";
                w["degree"] = n;
                w["trial"] = t;
                w["D"] = format_cycles(dm);
                std::ostringstream os;
                for (const auto &[word, c] : omega.terms()) {
                    os << c << "*";
                    for (Letter l : word) {
                        os << "v" << l;
                    }
                    os << " ";
                }
                w["omega"] = os.str();
                report.results.push_back(w);
            }
        }
        Record r;
        r["kind"] = "wigner";
        r["dim"] = d;
        r["degree"] = n;
        r["trials"] = cfg.trials;
        r["passed"] = passed;
        r["failed"] = cfg.trials - passed;
        report.results.push_back(r);
        all_pass = all_pass && passed == cfg.trials;
    }
    for (std::size_t n = 1; n <= cfg.degree; ++n) {
        const auto basis = lie_basis(d, n, cfg.limits);
        std::size_t checked = 0;
        std::size_t passed = 0;
        if (basis->dimension() > 0) {
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const RationalMatrix dm = random_matrix(rng, d, d);
                std::vector<Scalar> coords(basis->dimension());
                for (auto &c : coords) {
                    c = rng.small();
                }
                ++checked;
                if (friedrichs_check(dm, *basis, coords)) {
                    ++passed;
                } else {
                    Record w;
                    w["kind"] = "witness";
                    w["check"] = "friedrichs";
                    w["degree"] = n;
                    w["trial"] = t;
                    w["D"] = format_cycles(dm);
                    w["omega"] = format_cycles(RationalMatrix::from_columns(coords.size(), {coords}));
                    report.results.push_back(w);
                }
            }
        }
        Record r;
        r["kind"] = "friedrichs";
        r["dim"] = d;
        r["degree"] = n;
        r["lie_dim"] = basis->dimension();
        r["checked"] = checked;
        r["passed"] = passed;
        r["vacuous"] = basis->dimension() == 0 || cfg.trials == 0;
        report.results.push_back(r);
        all_pass = all_pass && passed == checked;
    }
    if (!all_pass) {
        report.exit_code = kCheckFailed;
    }
}

std::string cell(const Record &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string render_text(const Record &doc)
{
    std::ostringstream os;
    os << "leibhom " << doc["version"].get<std::string>() << "\n";
    os << "config:";
    for (const auto &item : doc["config"].items()) {
        os << " " << item.key() << "=" << cell(item.value());
    }
    os << "\n";
    const auto &results = doc["results"];
    std::size_t start = 0;
    while (start < results.size()) {
        const std::string kind = results[start]["kind"].get<std::string>();
        std::size_t end = start;
        std::vector<std::string> columns;
        while (end < results.size() && results[end]["kind"].get<std::string>() == kind) {
            for (const auto &item : results[end].items()) {
                if (item.key() != "kind" && std::find(columns.begin(), columns.end(), item.key()) == columns.end()) {
                    columns.push_back(item.key());
                }
            }
            ++end;
        }
        std::vector<std::size_t> width(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            width[c] = columns[c].size();
            for (std::size_t r = start; r < end; ++r) {
                if (results[r].contains(columns[c])) {
                    width[c] = std::max(width[c], cell(results[r][columns[c]]).size());
                }
            }
        }
        os << "\n[" << kind << "]\n";
        auto line = [&](auto &&value_of) {
            std::string s;
            for (std::size_t c = 0; c < columns.size(); ++c) {
                std::string v = value_of(c);
                v.resize(width[c], ' ');
                s += (c == 0 ? "" : "  ") + v;
            }
            while (!s.empty() && s.back() == ' ') {
                s.pop_back();
            }
            os << s << "\n";
        };
        line([&](std::size_t c) { return columns[c]; });
        for (std::size_t r = start; r < end; ++r) {
            line([&](std::size_t c) {
                return results[r].contains(columns[c]) ? cell(results[r][columns[c]]) : std::string("-");
            });
        }
        start = end;
    }
    if (doc.contains("timing_ms")) {
        os << "\ntiming_ms: " << doc["timing_ms"].dump() << "\n";
    }
    return os.str();
}

std::string render_csv(const Record &doc)
{
    std::vector<std::string> columns{"kind"};
    for (const auto &rec : doc["results"]) {
        for (const auto &item : rec.items()) {
            if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) {
                columns.push_back(item.key());
            }
        }
    }
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        os << (c == 0 ? "" : ",") << columns[c];
    }
    os << "\n";
    for (const auto &rec : doc["results"]) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            os << (c == 0 ? "" : ",");
            if (rec.contains(columns[c])) {
                os << csv_escape(cell(rec[columns[c]]));
            }
        }
        os << "\n";
    }
    return os.str();
}

} // namespace

Command parse_command(const std::string &name)
{
    const auto &table = command_table();
    auto it = table.find(name);
    if (it == table.end()) {
        std::string list;
        for (const auto &[k, v] : table) {
            list += (list.empty() ? "" : ", ") + k;
        }
        throw InputError("unknown command '" + name + "'; expected one of: " + list);
    }
    return it->second;
}

std::string to_string(Command c)
{
    for (const auto &[k, v] : command_table()) {
        if (v == c) {
            return k;
        }
    }
    return "?";
}

OutputFormat parse_format(const std::string &name)
{
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw InputError("--format must be text, json or csv, got '" + name + "'");
}

std::size_t witt_number(std::size_t generators, std::size_t weight)
{
    auto mobius = [](std::size_t n) {
        int mu = 1;
        for (std::size_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) {
                    return 0;
                }
                mu = -mu;
            }
        }
        return n > 1 ? -mu : mu;
    };
    long long total = 0;
    for (std::size_t e = 1; e <= weight; ++e) {
        if (weight % e != 0) {
            continue;
        }
        long long power = 1;
        for (std::size_t k = 0; k < weight / e; ++k) {
            power *= static_cast<long long>(generators);
        }
        total += mobius(e) * power;
    }
    return static_cast<std::size_t>(total / static_cast<long long>(weight));
}

nlohmann::ordered_json Report::to_json() const
{
    nlohmann::ordered_json doc;
    doc["version"] = kToolVersion;
    doc["config"] = config;
    doc["results"] = results;
    if (elapsed_ms) {
        doc["timing_ms"] = *elapsed_ms;
    }
    return doc;
}

Report run(const RunConfig &cfg)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    auto &c = report.config;
    c["command"] = to_string(cfg.command);
    c["input"] = cfg.input;
    c["degree"] = cfg.degree;
    c["weight"] = cfg.weight;
    c["generators"] = cfg.generators;
    c["action"] = cfg.action;
    c["seed"] = cfg.seed;
    c["trials"] = cfg.trials;
    c["format"] = format_format(cfg.format);
    c["cap"] = cfg.limits.max_columns;

    const bool needs_degree = cfg.command == Command::Li || cfg.command == Command::Conjecture1 ||
                              cfg.command == Command::Wigner;
    if (needs_degree && cfg.degree == 0) {
        throw InputError(to_string(cfg.command) + " needs --degree >= 1");
    }

    switch (cfg.command) {
    case Command::Validate:
        run_validate(cfg, report);
        break;
    case Command::Hl:
        run_hl(cfg, report);
        break;
    case Command::Li:
        run_li(cfg, report);
        break;
    case Command::Conjecture1:
        run_conjecture1(cfg, report);
        break;
    case Command::Conjecture2:
        run_conjecture2(cfg, report);
        break;
    case Command::Wigner:
        run_wigner(cfg, report);
        break;
    case Command::Export: {
        const LeibnizAlgebra a = load_input(cfg.input);
        report.payload = nlohmann::ordered_json::parse(algebra_to_json(a).dump());
        break;
    }
    }
    if (cfg.timing) {
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

std::string render(const Report &report, OutputFormat format)
{
    if (report.payload) {
        return report.payload->dump(2) + "\n";
    }
    const auto doc = report.to_json();
    switch (format) {
    case OutputFormat::Json:
        return doc.dump(2) + "\n";
    case OutputFormat::Csv:
        return render_csv(doc);
    default:
        return render_text(doc);
    }
}

} // namespace leibhom
