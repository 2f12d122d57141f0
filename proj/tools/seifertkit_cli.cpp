// seifertkit: cosmetic-crossing obstructions for genus-one knots.
//
//   seifertkit check <knotspec> [--unique-surface] [--format json|text]
//   seifertkit table [--format json|text]
//   seifertkit certificate chain <a> <b>
//   seifertkit certificate pair <b>
//   seifertkit certificate verify <file>
//   seifertkit congruent <a> <b> <c> [--format json|text]
//
// Exit status: 0 on success, 2 on bad input, 1 when a certificate fails to verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "seifertkit/seifertkit.hpp"

namespace sk = seifertkit;

namespace {

constexpr int kInputError = 2;

sk::Integer parse_int_arg(const std::string &s, const char *what) {
    std::string t = s;
    if (!t.empty() && t.front() == '+')
        t.erase(0, 1);
    sk::Integer x;
    if (t.empty() || x.set_str(t, 10) != 0)
        throw sk::InputError(std::string(what) + ": expected an integer, got '" + s + "'");
    return x;
}

std::string join(const std::vector<std::string> &parts) {
    std::string out;
    for (const auto &p : parts) {
        if (!out.empty())
            out += ' ';
        out += p;
    }
    return out;
}

int run_check(const std::vector<std::string> &spec_words, bool unique_surface, const std::string &format) {
    const sk::KnotSpec spec = sk::parse_knot_spec(join(spec_words));
    const sk::ObstructionReport report = sk::analyze(spec, unique_surface);
    if (format == "json")
        std::cout << sk::to_json(report).dump(2) << '\n';
    else
        std::cout << sk::report_text(report);
    return 0;
}

int run_table(const std::string &format) {
    const sk::TableScreen screen = sk::run_table_screen();
    if (format == "json") {
        nlohmann::json j;
        j["survivors"] = screen.survivors;
        nlohmann::json reports = nlohmann::json::array();
        for (const auto &r : screen.reports)
            reports.push_back(sk::to_json(r));
        j["reports"] = reports;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "knot        det  square  verdict       reasons / notes\n";
    for (std::size_t i = 0; i < screen.reports.size(); ++i) {
        const auto &entry = sk::catalog()[i];
        const auto &r = screen.reports[i];
        std::ostringstream line;
        line.width(12);
        line << std::left << entry.name;
        line.width(5);
        line << r.determinant.get_str();
        line.width(8);
        line << (r.det_square ? "yes" : "no");
        line.width(14);
        line << sk::to_string(r.verdict);
        std::string detail;
        for (const auto &reason : r.reasons)
            detail += (detail.empty() ? "" : ", ") + reason.tag;
        if (entry.settled_by)
            detail += (detail.empty() ? "" : ", ") + std::string("externally settled");
        std::cout << line.str() << detail << '\n';
    }
    std::cout << "square determinant: " << join(screen.survivors) << '\n';
    return 0;
}

int run_chain(const std::string &a, const std::string &b) {
    const auto cert = sk::lemma_chain_certificate(parse_int_arg(a, "a"), parse_int_arg(b, "b"));
    std::cout << sk::serialize_certificate(cert);
    return 0;
}

int run_pair(const std::string &b) {
    sk::SEquivPair pair;
    try {
        pair = sk::construct_sequiv_pair(parse_int_arg(b, "b"));
    } catch (const sk::PreconditionError &e) {
        throw sk::InputError(e.what());
    }
    const sk::Integer bb = parse_int_arg(b, "b");
    std::cout << "# a=" << pair.a.get_str() << " b=" << bb.get_str() << " k=" << pair.k.get_str() << '\n';
    std::cout << "# congruent: "
              << (sk::congruence_classifier_2x2(pair.a, bb, pair.a + 1) ? "yes" : "no") << '\n';
    std::cout << sk::serialize_certificate(pair.cert);
    return 0;
}

int run_verify(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw sk::InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto cert = sk::parse_certificate(buf.str());
    const auto result = sk::verify_certificate(cert);
    if (result) {
        std::cout << "OK " << cert.steps.size() << " steps\n";
        return 0;
    }
    std::cout << "FAIL at step " << *result.failed_step << ": " << result.message << '\n';
    return 1;
}

int run_congruent(const std::string &as, const std::string &bs, const std::string &cs, const std::string &format) {
    const sk::Integer a = parse_int_arg(as, "a"), b = parse_int_arg(bs, "b"), c = parse_int_arg(cs, "c");
    const auto n = sk::congruence_classifier_2x2(a, b, c);
    const sk::IntMatrix v(2, 2, {a, b, b + 1, sk::Integer(0)});
    const sk::IntMatrix w(2, 2, {c, b, b + 1, sk::Integer(0)});
    if (format == "json") {
        nlohmann::json j{{"a", sk::to_json(a)}, {"b", sk::to_json(b)}, {"c", sk::to_json(c)},
                         {"congruent", n.has_value()}};
        j["n"] = n ? sk::to_json(*n) : nlohmann::json(nullptr);
        j["witness"] = n ? sk::to_json(sk::IntMatrix(2, 2, {sk::Integer(1), *n, sk::Integer(0), sk::Integer(1)}))
                         : nlohmann::json(nullptr);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    if (n)
        std::cout << v.to_string() << " ~ " << w.to_string() << " : congruent, n = " << n->get_str()
                  << ", P = [[1," << n->get_str() << "],[0,1]]\n";
    else
        std::cout << v.to_string() << " ~ " << w.to_string() << " : not congruent (2b+1 = "
                  << sk::Integer(2 * b + 1).get_str() << " does not divide c - a = " << sk::Integer(c - a).get_str()
                  << ")\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cosmetic-crossing obstructions and S-equivalence certificates for genus-one knots"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto *check = app.add_subcommand("check", "Run the obstruction checks on one knot");
    std::vector<std::string> spec_words;
    bool unique_surface = false;
    check->add_option("knotspec", spec_words,
                      "\"matrix a,b;c,d\" | \"pretzel p,q,r\" | \"whitehead +|- n\" | \"catalog NAME\"")
        ->required();
    check->add_flag("--unique-surface", unique_surface, "Assert the knot has a unique minimal-genus Seifert surface");
    add_format(check);

    auto *table = app.add_subcommand("table", "Screen the genus-one knots with at most 12 crossings");
    add_format(table);

    auto *certificate = app.add_subcommand("certificate", "Emit or verify S-equivalence certificates");
    certificate->require_subcommand(1);
    std::string cert_a, cert_b, cert_file;
    auto *chain = certificate->add_subcommand("chain", "Certificate ((a,b),(b+1,0)) ~ ((ab^2,b),(b+1,0))");
    chain->add_option("a", cert_a)->required();
    chain->add_option("b", cert_b)->required();
    auto *pair = certificate->add_subcommand("pair", "S-equivalent, non-congruent pair for b > 4, b = 0,2 mod 3");
    pair->add_option("b", cert_b)->required();
    auto *verify = certificate->add_subcommand("verify", "Check a serialized certificate");
    verify->add_option("file", cert_file)->required();

    auto *congruent = app.add_subcommand("congruent", "Is ((a,b),(b+1,0)) congruent to ((c,b),(b+1,0))?");
    std::string ca, cb, cc;
    congruent->add_option("a", ca)->required();
    congruent->add_option("b", cb)->required();
    congruent->add_option("c", cc)->required();
    add_format(congruent);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (check->parsed())
            return run_check(spec_words, unique_surface, format);
        if (table->parsed())
            return run_table(format);
        if (chain->parsed())
            return run_chain(cert_a, cert_b);
        if (pair->parsed())
            return run_pair(cert_b);
        if (verify->parsed())
            return run_verify(cert_file);
        if (congruent->parsed())
            return run_congruent(ca, cb, cc, format);
    } catch (const sk::InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return 0;
}
