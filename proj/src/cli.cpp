#include "mprod/cli.hpp"

#include "mprod/errors.hpp"
#include "mprod/fixtures.hpp"
#include "mprod/geninv.hpp"
#include "mprod/io.hpp"
#include "mprod/random.hpp"
#include "mprod/solvers.hpp"
#include "mprod/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>

namespace mprod::cli {

namespace {

struct Common {
    std::string transform;
};

// Loads M, or the identity of size n3 when no file was given.
TransformSpec load_transform_or_identity(const std::string& path, Index n3, std::ostream& err) {
    if (path.empty()) return TransformSpec::identity(n3);
    TransformSpec t = io::load_transform(path);
    if (t.ill_conditioned()) {
        err << "warning: transform condition estimate " << t.condition_estimate() << " exceeds "
            << TransformSpec::kIllConditioned << "\n";
    }
    return t;
}

void emit(const io::Json& j, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << io::format(j) << '\n';
    } else {
        io::write_json(j, path);
    }
}

// A^- for the commands that take one: an explicit tensor file, a parameter
// file, seeded parameters, or zero parameters (A^- = A^+).
struct AMinusSource {
    std::string params;
    std::optional<std::uint64_t> seed;
    std::string params_out;
};

Tensor3 resolve_a_minus(const AMinusSource& src, const Tensor3& a, const TransformSpec& t) {
    const SliceSVD svd = slice_svd(a, t);
    OneInverseParams params;
    if (!src.params.empty()) {
        const io::Json j = io::read_json(src.params);
        const std::string kind = io::kind_of(j);
        if (kind == "tensor") {
            Tensor3 g = io::tensor_from_json(j);
            if (!src.params_out.empty()) throw InputError("--params-out needs parameter blocks, not an explicit A^-");
            return g;
        }
        params = io::params_from_json(j);
    } else if (src.seed) {
        params = OneInverseParams::random(svd, *src.seed);
    } else {
        params = OneInverseParams::zeros(svd);
    }
    if (!src.params_out.empty()) io::write_json(io::params_to_json(params), src.params_out);
    return one_inverse(svd, params, t);
}

void add_a_minus_options(CLI::App* cmd, AMinusSource& src) {
    auto* p = cmd->add_option("--params", src.params, "A^- as a tensor file, or one-inverse-params file");
    auto* s = cmd->add_option("--params-seed", src.seed, "Seed for random {1}-inverse parameters");
    p->excludes(s);
    cmd->add_option("--params-out", src.params_out, "Write the parameter blocks that were used");
}

const std::map<std::string, std::string> kOps{
    {"mp", "Moore-Penrose inverse"},          {"one-inverse", "{1}-inverse"},
    {"one-mp", "1-MP inverse"},               {"drazin", "Drazin inverse"},
    {"one-d", "1-D inverse"},                 {"one-star", "1-Star inverse"},
    {"inv", "exact inverse"},                 {"index", "tensor index"},
};

std::vector<std::string> keys(const std::map<std::string, std::string>& m) {
    std::vector<std::string> k;
    for (const auto& [name, _] : m) k.push_back(name);
    return k;
}

struct ComputeArgs {
    std::string op;
    std::string input;
    std::string output;
    AMinusSource a_minus;
    std::optional<std::uint64_t> seed;
};

int run_compute(const ComputeArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    const Tensor3 a = io::load_tensor(args.input);
    const TransformSpec t = load_transform_or_identity(common.transform, a.slices(), err);
    AMinusSource src = args.a_minus;
    if (args.seed) {
        if (src.seed || !src.params.empty()) throw InputError("--seed conflicts with --params/--params-seed");
        src.seed = args.seed;
    }
    if (args.op == "index") {
        emit(io::index_to_json(tensor_index(a, t)), args.output, out);
        return kOk;
    }
    Tensor3 x;
    if (args.op == "mp") {
        x = mp_inverse(a, t);
    } else if (args.op == "one-inverse") {
        x = resolve_a_minus(src, a, t);
    } else if (args.op == "one-mp") {
        x = one_mp_inverse(a, resolve_a_minus(src, a, t), t);
    } else if (args.op == "drazin") {
        x = drazin_inverse(a, t);
    } else if (args.op == "one-d") {
        x = one_d_inverse(a, resolve_a_minus(src, a, t), t);
    } else if (args.op == "one-star") {
        x = one_star_inverse(a, resolve_a_minus(src, a, t), t);
    } else {
        x = exact_inverse(a, t);
    }
    emit(io::tensor_to_json(x), args.output, out);
    return kOk;
}

struct VerifyArgs {
    std::string claim;
    std::string a;
    std::string x;
    std::string a_minus;
    double tol = kDefaultVerifyTolerance;
};

int run_verify(const VerifyArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    const Tensor3 a = io::load_tensor(args.a);
    const Tensor3 x = io::load_tensor(args.x);
    const TransformSpec t = load_transform_or_identity(common.transform, a.slices(), err);
    const Claim claim = *parse_claim(args.claim);
    const bool needs_minus = claim == Claim::one_d || claim == Claim::one_star;
    if (needs_minus && args.a_minus.empty()) {
        throw InputError("claim " + args.claim + " needs --a-minus");
    }
    VerificationReport r;
    switch (claim) {
    case Claim::mp: r = check_penrose(a, x, t, {1, 2, 3, 4}, args.tol); break;
    case Claim::one_inverse: r = check_penrose(a, x, t, {1}, args.tol); break;
    case Claim::one_mp: r = check_one_mp_system(a, x, t, args.tol); break;
    case Claim::drazin: r = check_drazin(a, x, t, args.tol); break;
    case Claim::one_d: r = check_one_d(a, x, io::load_tensor(args.a_minus), t, args.tol); break;
    case Claim::one_star: r = check_one_star(a, x, io::load_tensor(args.a_minus), t, args.tol); break;
    case Claim::exact: r = check_exact(a, x, t, args.tol); break;
    case Claim::penrose: r = check_penrose(a, x, t, {1, 2, 3, 4}, args.tol); break;
    }
    out << io::format(io::report_to_json(r)) << '\n';
    return r.pass ? kOk : kVerifyFailed;
}

struct SolveArgs {
    std::string system;
    std::string a;
    std::string b;
    std::string z;
    std::optional<std::uint64_t> seed;
    AMinusSource a_minus;
    std::string output;
    std::string family_out;
};

int run_solve(const SolveArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    const System sys = *parse_system(args.system);
    const Tensor3 a = io::load_tensor(args.a);
    const TransformSpec t = load_transform_or_identity(common.transform, a.slices(), err);
    std::optional<Tensor3> b;
    if (!args.b.empty()) b = io::load_tensor(args.b);
    if (needs_rhs(sys) && !b) throw InputError("system " + args.system + " needs --b");
    if (!needs_rhs(sys) && b) throw InputError("system " + args.system + " takes no --b");
    const Tensor3 a_minus = resolve_a_minus(args.a_minus, a, t);
    const SolutionFamily family = solve(sys, a, b ? &*b : nullptr, a_minus, t);
    if (!args.family_out.empty()) io::write_json(io::family_to_json(family), args.family_out);
    const auto [zr, zc] = family.free_shape();
    Tensor3 z(zr, zc, a.slices());
    if (!args.z.empty()) {
        z = io::load_tensor(args.z);
    } else if (args.seed) {
        z = random_tensor(zr, zc, a.slices(), *args.seed);
    }
    emit(io::tensor_to_json(family.instantiate(z, t)), args.output, out);
    return kOk;
}

struct GenArgs {
    std::vector<Index> shape;
    std::uint64_t seed = 0;
    std::optional<int> index;
    std::string output;
};

int run_gen(const GenArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    if (args.shape.size() != 3) throw InputError("--shape takes n1,n2,n3");
    const Index n1 = args.shape[0];
    const Index n2 = args.shape[1];
    const Index n3 = args.shape[2];
    if (n1 <= 0 || n2 <= 0 || n3 <= 0) throw ShapeError("--shape entries must be positive");
    Tensor3 a;
    if (args.index) {
        if (n1 != n2) throw ShapeError("--index needs n1 == n2");
        const TransformSpec t = load_transform_or_identity(common.transform, n3, err);
        if (t.size() != n3) throw ShapeError("transform size does not match n3");
        a = random_tensor_with_index(n1, *args.index, t, args.seed);
    } else {
        a = random_tensor(n1, n2, n3, args.seed);
    }
    emit(io::tensor_to_json(a), args.output, out);
    return kOk;
}

int dispatch(CLI::App& app, const std::vector<std::string>& args, const std::function<int()>& body,
             std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return body();
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumerical;
    } catch (const ParseError& e) {
        err << "parse error at byte " << e.byte_offset() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return kUsage;
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized inverses of third-order tensors under the M-product", "mprod"};
    app.require_subcommand(1);
    Common common;

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Compute an inverse or the tensor index");
    c->add_option("--op", compute.op, "Operation")->required()->check(CLI::IsMember(keys(kOps)));
    c->add_option("--input", compute.input, "Tensor A")->required();
    c->add_option("--transform", common.transform, "Transform M (default: identity)");
    add_a_minus_options(c, compute.a_minus);
    c->add_option("--seed", compute.seed, "Same as --params-seed");
    c->add_option("--output", compute.output, "Output file (default: stdout)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check the defining equations of a claimed inverse");
    v->add_option("--claim", verify.claim, "Claimed inverse")
        ->required()
        ->check(CLI::IsMember({"mp", "penrose", "one-mp", "drazin", "one-d", "one-star", "exact", "one-inverse"}));
    v->add_option("--a", verify.a, "Tensor A")->required();
    v->add_option("--x", verify.x, "Candidate X")->required();
    v->add_option("--a-minus", verify.a_minus, "The {1}-inverse X was built from");
    v->add_option("--transform", common.transform, "Transform M (default: identity)");
    v->add_option("--tol", verify.tol, "Relative tolerance")->check(CLI::PositiveNumber);

    SolveArgs solve_args;
    auto* s = app.add_subcommand("solve", "Instantiate the general solution of a multilinear system");
    s->add_option("--system", solve_args.system, "System")
        ->required()
        ->check(CLI::IsMember({"mp-proj", "mp-right", "drazin-proj", "drazin-right", "star-proj"}));
    s->add_option("--a", solve_args.a, "Tensor A")->required();
    s->add_option("--b", solve_args.b, "Right-hand side B");
    auto* zo = s->add_option("--z", solve_args.z, "Free parameter Z (default: zero)");
    auto* so = s->add_option("--seed", solve_args.seed, "Seed for a random Z");
    zo->excludes(so);
    add_a_minus_options(s, solve_args.a_minus);
    s->add_option("--transform", common.transform, "Transform M (default: identity)");
    s->add_option("--output", solve_args.output, "Output file (default: stdout)");
    s->add_option("--family-out", solve_args.family_out, "Write the solution family");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a seeded random tensor");
    g->add_option("--shape", gen.shape, "n1,n2,n3")->required()->delimiter(',')->expected(3);
    g->add_option("--seed", gen.seed, "Seed")->required();
    g->add_option("--index", gen.index, "Prescribed index (square shapes)")->check(CLI::NonNegativeNumber);
    g->add_option("--transform", common.transform, "Transform M for --index (default: identity)");
    g->add_option("--output", gen.output, "Output file (default: stdout)");

    std::string fixture_dir;
    auto* f = app.add_subcommand("fixtures", "Write the bundled worked examples");
    f->add_option("--dir", fixture_dir, "Target directory")->required();

    auto body = [&]() -> int {
        if (*c) return run_compute(compute, common, out, err);
        if (*v) return run_verify(verify, common, out, err);
        if (*s) return run_solve(solve_args, common, out, err);
        if (*g) return run_gen(gen, common, out, err);
        for (const auto& p : fixtures::write_all(fixture_dir)) out << p.string() << '\n';
        return kOk;
    };
    return dispatch(app, args, body, out, err);
}

} // namespace mprod::cli
