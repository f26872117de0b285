// Command-line front end: period reports, theorem bounds, range verification,
// tightness tables and sequence printing in text/CSV/JSON.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pisano/theorems.hpp"

using json = nlohmann::ordered_json;
using namespace pisano;

namespace {

json to_json(const PeriodReport& r) {
    json methods;
    methods["naive"] = r.methods.naive ? json(*r.methods.naive) : json(nullptr);
    methods["matrix_order"] = r.methods.matrix_order ? json(*r.methods.matrix_order) : json(nullptr);
    methods["eigenvalue"] = r.methods.eigenvalue ? json(*r.methods.eigenvalue) : json(nullptr);
    return json{{"a", r.spec.a},
                {"b", r.spec.b},
                {"modulus", r.spec.modulus},
                {"period", r.period},
                {"classification", to_string(r.classification)},
                {"theorem", to_string(r.theorem)},
                {"bound", r.bound ? json(*r.bound) : json(nullptr)},
                {"divides_bound", r.divides_bound},
                {"tight", r.tight},
                {"methods", methods}};
}

json to_json(const BoundResult& r, i64 a, i64 b) {
    return json{{"p", r.p},
                {"a", a},
                {"b", b},
                {"classification", to_string(r.classification)},
                {"bound", r.bound ? json(*r.bound) : json(nullptr)},
                {"theorem", to_string(r.theorem)}};
}

std::string opt_str(const std::optional<u64>& v) { return v ? std::to_string(*v) : ""; }

const char* report_csv_header =
    "a,b,modulus,period,classification,theorem,bound,divides_bound,tight";

std::string report_csv_row(const PeriodReport& r) {
    std::string row;
    row += std::to_string(r.spec.a) + ',' + std::to_string(r.spec.b) + ',' +
           std::to_string(r.spec.modulus) + ',' + std::to_string(r.period) + ',';
    row += std::string(to_string(r.classification)) + ',' + std::string(to_string(r.theorem)) + ',';
    row += opt_str(r.bound) + ',' + (r.divides_bound ? "true" : "false") + ',' +
           (r.tight ? "true" : "false");
    return row;
}

void print_report_text(const PeriodReport& r) {
    std::printf("a:              %lld\n", static_cast<long long>(r.spec.a));
    std::printf("b:              %lld\n", static_cast<long long>(r.spec.b));
    std::printf("modulus:        %llu\n", static_cast<unsigned long long>(r.spec.modulus));
    std::printf("period:         %llu\n", static_cast<unsigned long long>(r.period));
    std::printf("classification: %s\n", std::string(to_string(r.classification)).c_str());
    std::printf("theorem:        %s\n", std::string(to_string(r.theorem)).c_str());
    std::printf("bound:          %s\n", r.bound ? opt_str(r.bound).c_str() : "-");
    std::printf("divides_bound:  %s\n", r.divides_bound ? "true" : "false");
    std::printf("tight:          %s\n", r.tight ? "true" : "false");
    std::printf("naive:          %s\n", r.methods.naive ? opt_str(r.methods.naive).c_str() : "-");
    std::printf("matrix_order:   %s\n",
                r.methods.matrix_order ? opt_str(r.methods.matrix_order).c_str() : "-");
    std::printf("eigenvalue:     %s\n",
                r.methods.eigenvalue ? opt_str(r.methods.eigenvalue).c_str() : "-");
}

struct Options {
    i64 a = 1;
    i64 b = 1;
    u64 modulus = 0;
    u64 prime = 0;
    u64 max_prime = 0;
    u64 count = 0;
    std::string format = "text";
};

int cmd_period(const Options& opt) {
    PeriodReport r = analyze(RecurrenceSpec{opt.a, opt.b, opt.modulus});
    if (opt.format == "json") {
        std::cout << to_json(r).dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << report_csv_header << '\n' << report_csv_row(r) << '\n';
    } else {
        print_report_text(r);
    }
    return 0;
}

int cmd_bound(const Options& opt) {
    BoundResult r = bound_for_prime(opt.a, opt.b, opt.prime);
    if (opt.format == "json") {
        std::cout << to_json(r, opt.a, opt.b).dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << "p,a,b,classification,bound,theorem\n";
        std::cout << r.p << ',' << opt.a << ',' << opt.b << ',' << to_string(r.classification)
                  << ',' << opt_str(r.bound) << ',' << to_string(r.theorem) << '\n';
    } else {
        std::printf("p:              %llu\n", static_cast<unsigned long long>(r.p));
        std::printf("classification: %s\n", std::string(to_string(r.classification)).c_str());
        std::printf("bound:          %s\n", r.bound ? opt_str(r.bound).c_str() : "-");
        std::printf("theorem:        %s\n", std::string(to_string(r.theorem)).c_str());
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    auto reports = verify_range(opt.a, opt.b, opt.max_prime);
    bool violation = false;
    for (const auto& r : reports)
        if (!r.divides_bound) violation = true;

    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& r : reports) rows.push_back(to_json(r));
        std::cout << rows.dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << report_csv_header << '\n';
        for (const auto& r : reports) std::cout << report_csv_row(r) << '\n';
    } else {
        std::printf("%8s %10s %10s %-4s %-11s %-7s %s\n", "p", "period", "bound", "thm", "class",
                    "divides", "tight");
        for (const auto& r : reports) {
            std::printf("%8llu %10llu %10s %-4s %-11s %-7s %s\n",
                        static_cast<unsigned long long>(r.spec.modulus),
                        static_cast<unsigned long long>(r.period),
                        r.bound ? opt_str(r.bound).c_str() : "-",
                        std::string(to_string(r.theorem)).c_str(),
                        std::string(to_string(r.classification)).c_str(),
                        r.divides_bound ? "yes" : "NO", r.tight ? "tight" : "");
        }
    }
    if (violation) {
        std::cerr << "verify: divisibility violation found\n";
        return 1;
    }
    return 0;
}

int cmd_table(const Options& opt) {
    TightnessSurvey survey = tightness_survey(opt.a, opt.b, opt.max_prime);
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& r : survey.rows)
            rows.push_back(json{{"p", r.p}, {"period", r.period}, {"bound", r.bound}, {"tight", r.tight}});
        std::cout << rows.dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << "p,period,bound,tight\n";
        for (const auto& r : survey.rows)
            std::cout << r.p << ',' << r.period << ',' << r.bound << ','
                      << (r.tight ? "true" : "false") << '\n';
    } else {
        std::printf("%8s %10s %10s %s\n", "p", "period", "bound", "tight");
        for (const auto& r : survey.rows)
            std::printf("%8llu %10llu %10llu %s\n", static_cast<unsigned long long>(r.p),
                        static_cast<unsigned long long>(r.period),
                        static_cast<unsigned long long>(r.bound), r.tight ? "tight" : "");
        std::printf("tight %zu / %zu\n", survey.tight_count(), survey.rows.size());
    }
    return 0;
}

int cmd_sequence(const Options& opt) {
    auto values = sequence_slice(RecurrenceSpec{opt.a, opt.b, opt.modulus}, opt.count);
    if (opt.format == "json") {
        std::cout << json(values).dump() << '\n';
    } else if (opt.format == "csv") {
        std::cout << "index,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << i << ',' << values[i] << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << (i ? ", " : "") << values[i];
        std::cout << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periods of E_{n+1} = A*E_n + B*E_{n-1} modulo m"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--a", opt.a, "coefficient A (default 1)");
        sub->add_option("--b", opt.b, "coefficient B (default 1)");
        sub->add_option("--format", opt.format, "text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    };

    auto* period = app.add_subcommand("period", "period of the sequence mod m");
    period->add_option("--modulus", opt.modulus, "modulus m >= 2")->required();
    add_common(period);

    auto* bound = app.add_subcommand("bound", "theorem bound for a prime");
    bound->add_option("--prime", opt.prime, "odd prime p")->required();
    add_common(bound);

    auto* verify = app.add_subcommand("verify", "check period | bound over a prime range");
    verify->add_option("--max-prime", opt.max_prime, "scan odd primes up to this")->required();
    add_common(verify);

    auto* table = app.add_subcommand("table", "tightness survey over a prime range");
    table->add_option("--max-prime", opt.max_prime, "scan odd primes up to this")->required();
    add_common(table);

    auto* sequence = app.add_subcommand("sequence", "print E_0 .. E_{count-1} mod m");
    sequence->add_option("--modulus", opt.modulus, "modulus m >= 2")->required();
    sequence->add_option("--count", opt.count, "number of terms")->required();
    add_common(sequence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (period->parsed()) return cmd_period(opt);
        if (bound->parsed()) return cmd_bound(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (table->parsed()) return cmd_table(opt);
        if (sequence->parsed()) return cmd_sequence(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
