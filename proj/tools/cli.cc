#include "cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "qcma/analysis.h"
#include "qcma/gadgets.h"
#include "qcma/protocol.h"
#include "qcma/report.h"
#include "qcma/rewind.h"

namespace qcma::cli {

namespace {

enum class Semantics { Branching, Deferred, Both };

struct Config {
    std::string circuit_path;
    std::string witness;
    std::string k;
    std::string k_bits;
    std::string c = "2/3";
    std::string s = "1/3";
    std::string l_mode = "hadamard";
    std::string semantics = "branching";
    std::string emit_path;
    bool json = false;
};

std::string approx(double v) {
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
}

Semantics parse_semantics(const std::string &text) {
    if (text == "branching") {
        return Semantics::Branching;
    }
    if (text == "deferred") {
        return Semantics::Deferred;
    }
    if (text == "both") {
        return Semantics::Both;
    }
    throw std::invalid_argument("unknown semantics '" + text + "' (expected branching, deferred or both)");
}

Json report_header(const std::string &command, const Config &cfg, const Circuit &c) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["circuit_path"] = cfg.circuit_path;
    j["circuit"] = circuit_summary_json(c);
    return j;
}

int cmd_prob(const Config &cfg, std::ostream &out) {
    Circuit v_template = read_circuit_file(cfg.circuit_path);
    Bits w = parse_bits(cfg.witness);
    Circuit v = hardcode_witness(v_template, w);
    Dyadic p = exact_acceptance_prob(v_template, w);
    std::size_t l_h = choose_l(v, LMode::HadamardCount);
    std::size_t l_g = choose_l(v, LMode::GateCount);
    if (cfg.json) {
        Json j = report_header("prob", cfg, v_template);
        j["witness"] = cfg.witness;
        j["probability"] = p.str();
        j["l_conventions"] = Json::array({
            {{"l_mode", "hadamard"}, {"l", l_h}, {"k_xw", p.numerator_over(l_h).str()}},
            {{"l_mode", "gatecount"}, {"l", l_g}, {"k_xw", p.numerator_over(l_g).str()}},
        });
        out << j.dump(2) << "\n";
        return kExitPass;
    }
    out << "acceptance probability: " << p << "   (approx " << approx(p.approx()) << ")\n";
    out << "l (hadamard)  = " << l_h << "   k_xw = " << p.numerator_over(l_h) << "\n";
    out << "l (gatecount) = " << l_g << "   k_xw = " << p.numerator_over(l_g) << "\n";
    return kExitPass;
}

BigInt parse_k(const Config &cfg, std::size_t l) {
    if (!cfg.k.empty() && !cfg.k_bits.empty()) {
        throw std::invalid_argument("give --k or --k-bits, not both");
    }
    if (!cfg.k_bits.empty()) {
        Bits bits = parse_bits(cfg.k_bits);
        if (bits.size() != l) {
            throw std::invalid_argument("--k-bits needs exactly l=" + std::to_string(l) + " bits");
        }
        return decode_s_value(bits);
    }
    if (cfg.k.empty()) {
        throw std::invalid_argument("transform requires --k or --k-bits");
    }
    Rational k = Rational::parse(cfg.k);
    if (k.den() != 1) {
        throw std::invalid_argument("--k must be an integer");
    }
    return k.num();
}

int cmd_transform(const Config &cfg, std::ostream &out) {
    Circuit v_template = read_circuit_file(cfg.circuit_path);
    Bits w = parse_bits(cfg.witness);
    Rational c = Rational::parse(cfg.c);
    LMode mode = parse_l_mode(cfg.l_mode);
    Semantics semantics = parse_semantics(cfg.semantics);
    Circuit v = hardcode_witness(v_template, w);
    std::size_t l = choose_l(v, mode);
    BigInt k = parse_k(cfg, l);

    TransformedProtocol tp = build_protocol(v_template, TransformParams{l, c, k, w});
    Dyadic prob = simulate(v).measure_prob(v.output());
    BigInt k_xw = prob.numerator_over(l);
    Dyadic p_pred = predicted_p(k, k_xw, l);
    Dyadic acc_pred = tp.threshold_passed ? p_acc_formula(p_pred) : Dyadic(0);

    std::optional<TransformRun> branching;
    std::optional<Dyadic> deferred;
    if (semantics != Semantics::Deferred) {
        branching = run_transform(tp);
    }
    if (semantics != Semantics::Branching) {
        deferred = run_transform_deferred(tp);
    }
    Dyadic p_acc = branching ? branching->p_acc : *deferred;
    bool acc_equal = p_acc == acc_pred && (!branching || !deferred || branching->p_acc == *deferred);
    bool p_equal = !branching || !tp.threshold_passed || branching->p_first == p_pred;
    bool perfect = p_acc == Dyadic(1);

    if (!cfg.emit_path.empty()) {
        std::ofstream f(cfg.emit_path);
        if (!f) {
            throw std::invalid_argument("cannot write '" + cfg.emit_path + "'");
        }
        f << "# deferred-measurement form; output is the verdict qubit\n";
        f << format_circuit(defer_measurements(tp.protocol).circuit);
    }

    if (cfg.json) {
        Json j = report_header("transform", cfg, v_template);
        j["witness"] = cfg.witness;
        j["l_mode"] = l_mode_name(mode);
        j["l"] = l;
        j["k"] = k.str();
        j["c"] = c.str();
        j["probability"] = prob.str();
        j["k_xw"] = k_xw.str();
        j["threshold_passed"] = tp.threshold_passed;
        j["width"] = tp.layout.width();
        j["q_gate_count"] = tp.q_circuit.gate_count();
        if (branching) {
            j["branching"] = {{"p_first", branching->p_first.str()},
                              {"p_second", branching->p_second.str()},
                              {"p_acc", branching->p_acc.str()}};
        }
        if (deferred) {
            j["deferred"] = {{"p_acc", deferred->str()}};
        }
        j["p_predicted"] = tp.threshold_passed ? Json(p_pred.str()) : Json(nullptr);
        j["p_acc_predicted"] = acc_pred.str();
        j["p_equal"] = p_equal;
        j["p_acc_equal"] = acc_equal;
        j["perfect"] = perfect;
        out << j.dump(2) << "\n";
    } else {
        out << "verifier: width " << v.width() << ", " << v.gate_count() << " gates, " << v.hadamard_count()
            << " hadamards; P(accept) = " << prob << "\n";
        out << "l = " << l << " (" << l_mode_name(mode) << ")   k = " << k << "   k_xw = " << k_xw << "   c = " << c
            << "\n";
        out << "transformed verifier: " << tp.layout.width() << " qubits, Q has " << tp.q_circuit.gate_count()
            << " gates\n";
        if (!tp.threshold_passed) {
            out << "rejected at threshold check (k/2^l < c): p_acc = " << Dyadic(0) << "\n";
        } else {
            if (branching) {
                out << "p_first  measured " << branching->p_first << "   predicted " << p_pred << "   "
                    << (p_equal ? "equal" : "MISMATCH") << "\n";
            }
            out << "p_acc    ";
            if (branching) {
                out << "branching " << branching->p_acc << "   ";
            }
            if (deferred) {
                out << "deferred " << *deferred << "   ";
            }
            out << "predicted " << acc_pred << "   " << (acc_equal ? "equal" : "MISMATCH")
                << "   (approx " << approx(p_acc.approx()) << ")" << (perfect ? "   PERFECT" : "") << "\n";
        }
        if (!cfg.emit_path.empty()) {
            out << "deferred circuit written to " << cfg.emit_path << "\n";
        }
    }
    return p_equal && acc_equal ? kExitPass : kExitFail;
}

int cmd_sweep(const Config &cfg, std::ostream &out) {
    Circuit v_template = read_circuit_file(cfg.circuit_path);
    Bits w = parse_bits(cfg.witness);
    Rational c = Rational::parse(cfg.c);
    LMode mode = parse_l_mode(cfg.l_mode);
    WitnessSweep sweep = sweep_k(v_template, w, c, mode);
    bool all_equal = true;
    for (const KRow &row : sweep.rows) {
        all_equal = all_equal && row.p_equal && row.p_acc_equal;
    }
    if (cfg.json) {
        Json j = report_header("sweep", cfg, v_template);
        j["c"] = c.str();
        j["l_mode"] = l_mode_name(mode);
        j["sweep"] = witness_sweep_json(sweep);
        j["all_equal"] = all_equal;
        out << j.dump(2) << "\n";
    } else {
        out << "witness " << (w.empty() ? "(none)" : bits_str(w)) << "   P(accept) = " << sweep.probability
            << "   l = " << sweep.l << "   k_xw = " << sweep.k_xw_num << "   c = " << c << "\n";
        out << std::left << std::setw(8) << "k" << std::setw(16) << "p_measured" << std::setw(16) << "p_predicted"
            << std::setw(18) << "p_acc_measured" << std::setw(18) << "p_acc_predicted" << std::setw(10)
            << "approx" << "\n";
        for (const KRow &row : sweep.rows) {
            out << std::left << std::setw(8) << row.k.str() << std::setw(16) << row.p_measured.str() << std::setw(16)
                << row.p_predicted.str() << std::setw(18) << row.p_acc_measured.str() << std::setw(18)
                << row.p_acc_predicted.str() << std::setw(10) << approx(row.p_acc_measured.approx())
                << (row.p_acc_measured == Dyadic(1) ? "PERFECT" : "") << "\n";
        }
    }
    return all_equal ? kExitPass : kExitFail;
}

int cmd_verify(const Config &cfg, std::ostream &out) {
    Circuit v_template = read_circuit_file(cfg.circuit_path);
    Rational c = Rational::parse(cfg.c);
    Rational s = Rational::parse(cfg.s);
    LMode mode = parse_l_mode(cfg.l_mode);
    InstanceReport report = verify_theorem(v_template, v_template.witness_qubits().size(), c, s, mode);
    if (cfg.json) {
        Json j = report_header("verify", cfg, v_template);
        j["report"] = instance_report_json(report);
        out << j.dump(2) << "\n";
    } else {
        out << "c = " << c << "   s = " << s << "   soundness bound = " << report.bound << "   l-mode "
            << l_mode_name(mode) << "\n";
        out << "best witness " << (report.best.w.empty() ? "(none)" : bits_str(report.best.w))
            << "   P(accept) = " << report.best.probability << "\n";
        out << "instance: " << promise_case_name(report.promise) << "\n";
        switch (report.promise) {
            case PromiseCase::Yes:
                for (const auto &[w, p] : report.honest_p_acc) {
                    out << "  honest witness " << (w.empty() ? "(none)" : bits_str(w)) << ": p_acc = " << p << "\n";
                }
                out << "completeness: " << (*report.completeness_pass ? "PASS" : "FAIL") << "\n";
                break;
            case PromiseCase::No:
                out << "max p_acc over surviving (w, k) = " << *report.max_p_acc << "   (approx "
                    << approx(report.max_p_acc->approx()) << ")\n";
                out << "soundness: " << (*report.soundness_pass ? "PASS" : "FAIL") << "\n";
                break;
            case PromiseCase::Violating:
                for (const auto &[w, p] : report.witness_probs) {
                    out << "  witness " << (w.empty() ? "(none)" : bits_str(w)) << ": P(accept) = " << p << "\n";
                }
                out << "acceptance probability lies strictly between s and c; no verdict\n";
                break;
        }
        if (report.promise != PromiseCase::Violating) {
            out << "closed-form agreement: " << (report.formulas_pass ? "PASS" : "FAIL") << "\n";
        }
    }
    return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Exact simulation of the rewinding perfect-completeness verifier"};
    app.require_subcommand(1);

    auto add_circuit = [&](CLI::App *sub) {
        sub->add_option("--circuit", cfg.circuit_path, "Circuit file")->required();
    };
    auto add_common = [&](CLI::App *sub) {
        sub->add_flag("--json", cfg.json, "Emit a JSON report");
    };

    auto *prob = app.add_subcommand("prob", "Exact acceptance probability of a verifier and witness");
    add_circuit(prob);
    prob->add_option("--witness", cfg.witness, "Witness bits");
    add_common(prob);

    auto *transform = app.add_subcommand("transform", "Build and simulate the perfect-completeness verifier");
    add_circuit(transform);
    transform->add_option("--witness", cfg.witness, "Witness bits");
    transform->add_option("--k", cfg.k, "Claimed count k in [1, 2^l]");
    transform->add_option("--k-bits", cfg.k_bits, "Claimed count as an l-bit string (value + 1 encoding)");
    transform->add_option("--c", cfg.c, "Completeness threshold N/D");
    transform->add_option("--l-mode", cfg.l_mode, "hadamard or gatecount");
    transform->add_option("--semantics", cfg.semantics, "branching, deferred or both");
    transform->add_option("--emit", cfg.emit_path, "Write the deferred-measurement circuit here");
    add_common(transform);

    auto *verify = app.add_subcommand("verify", "Check completeness and soundness over all witnesses");
    add_circuit(verify);
    verify->add_option("--c", cfg.c, "Completeness threshold N/D");
    verify->add_option("--s", cfg.s, "Soundness threshold N/D");
    verify->add_option("--l-mode", cfg.l_mode, "hadamard or gatecount");
    add_common(verify);

    auto *sweep = app.add_subcommand("sweep", "Tabulate measured and predicted probabilities over k");
    add_circuit(sweep);
    sweep->add_option("--witness", cfg.witness, "Witness bits");
    sweep->add_option("--c", cfg.c, "Completeness threshold N/D");
    sweep->add_option("--l-mode", cfg.l_mode, "hadamard or gatecount");
    add_common(sweep);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (prob->parsed()) {
            return cmd_prob(cfg, out);
        }
        if (transform->parsed()) {
            return cmd_transform(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        return cmd_sweep(cfg, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qcma::cli
