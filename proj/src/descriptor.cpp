#include "idc/descriptor.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace idc {
namespace {

using json = nlohmann::ordered_json;

std::string gamma_string(double g) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), g);
    return std::string(buf, res.ptr);
}

std::string hex_u32(uint32_t v, int nibbles) {
    static const char* digits = "0123456789abcdef";
    std::string s(nibbles, '0');
    for (int i = nibbles - 1; i >= 0; --i) {
        s[i] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

uint32_t parse_hex(const std::string& s) {
    uint32_t v = 0;
    size_t i = s.rfind("0x", 0) == 0 ? 2 : 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        int nib = c >= 'a' ? c - 'a' + 10 : (c >= 'A' ? c - 'A' + 10 : c - '0');
        v = v << 4 | nib;
    }
    return v;
}

}  // namespace

std::string descriptor_to_json(const CodeSpec& code) {
    json j;
    j["version"] = 1;
    j["variant"] = variant_name(code.variant);
    j["field"] = {{"degree", code.rs.field->degree()},
                  {"modulus_hex", "0x" + hex_u32(code.rs.field->modulus(), (code.rs.field->degree() + 4) / 4)}};
    j["rs"] = {{"n", code.rs.n}, {"k", code.rs.k}, {"eval_point_rule", "antilog-then-zero"}};
    const auto& p = code.family.params;
    json inner;
    inner["n"] = p.n;
    inner["inner_degree"] = p.inner_degree;
    inner["k_prime"] = p.k_prime;
    inner["n_prime"] = p.n_prime;
    inner["d_prime"] = p.d_prime;
    inner["gamma"] = gamma_string(p.gamma);
    inner["sigma_out"] = p.sigma_out;
    if (p.variant == Variant::kR12) {
        inner["t"] = p.t;
        inner["s"] = p.s;
    }
    inner["pad"] = code.pad;
    if (code.family.seed) {
        inner["source"] = "smallbias";
        inner["bias_m"] = static_cast<int>(code.family.seed->bits.size()) / 2;
        inner["seed_hex"] = code.family.seed->to_hex();
    } else if (code.family.rng_seed) {
        inner["source"] = "uniform";
        inner["rng_seed"] = *code.family.rng_seed;
    } else {
        inner["source"] = "explicit";
        json mats = json::array();
        const int nib = (p.inner_degree + 3) / 4;
        for (const auto& mat : code.family.matrices) {
            std::string s;
            for (const auto& row : mat)
                for (uint32_t v : row) s += hex_u32(v, nib);
            mats.push_back(s);
        }
        inner["matrices_hex"] = mats;
    }
    j["inner"] = inner;
    if (code.family.verified) {
        j["verified"] = {{"property", code.family.verified->property},
                         {"mode", code.family.verified->mode},
                         {"trials", code.family.verified->trials}};
    } else {
        j["verified"] = {{"property", "unverified"}, {"mode", "none"}, {"trials", 0}};
    }
    return j.dump(2) + "\n";
}

CodeSpec descriptor_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("version").get<int>() != 1) throw std::invalid_argument("unsupported descriptor version");
    CodeSpec code;
    code.variant = variant_from_name(j.at("variant").get<std::string>());
    int degree = j.at("field").at("degree").get<int>();
    uint32_t modulus = parse_hex(j.at("field").at("modulus_hex").get<std::string>());
    auto field = modulus == FieldSpec::default_modulus(degree)
                     ? FieldSpec::with_degree(degree)
                     : std::make_shared<const FieldSpec>(degree, modulus);
    code.rs = RsSpec::make(field, j.at("rs").at("n").get<int>(), j.at("rs").at("k").get<int>());

    const auto& ji = j.at("inner");
    InnerParams p;
    p.variant = code.variant;
    p.n = ji.at("n").get<int>();
    p.inner_degree = ji.at("inner_degree").get<int>();
    p.k_prime = ji.at("k_prime").get<int>();
    p.n_prime = ji.at("n_prime").get<int>();
    p.d_prime = ji.at("d_prime").get<int>();
    p.gamma = std::stod(ji.at("gamma").get<std::string>());
    p.sigma_out = ji.at("sigma_out").get<int>();
    if (code.variant == Variant::kR12) {
        p.t = ji.at("t").get<int>();
        p.s = ji.at("s").get<int>();
    }
    code.pad = ji.at("pad").get<int>();

    const std::string source = ji.at("source").get<std::string>();
    std::optional<InnerFamily> fam;
    if (source == "smallbias") {
        int m = ji.at("bias_m").get<int>();
        BiasSpec bias = BiasSpec::with_seed_bits(p.total_bits(), 2 * m);
        Seed seed = Seed::from_hex(ji.at("seed_hex").get<std::string>(), 2 * m);
        StreamBitSource src{BitStream(generate(bias, seed))};
        fam = sample_family(p, src);
        if (fam) fam->seed = seed;
    } else if (source == "uniform") {
        uint64_t rng_seed = ji.at("rng_seed").get<uint64_t>();
        UniformBitSource src(rng_seed);
        fam = sample_family(p, src);
        if (fam) fam->rng_seed = rng_seed;
    } else if (source == "explicit") {
        InnerFamily f;
        f.params = p;
        f.inner_field = FieldSpec::with_degree(p.inner_degree);
        const int nib = (p.inner_degree + 3) / 4;
        for (const auto& jm : ji.at("matrices_hex")) {
            std::string s = jm.get<std::string>();
            if (static_cast<int>(s.size()) != p.k_prime * p.n_prime * nib)
                throw std::invalid_argument("matrix hex length mismatch");
            std::vector<std::vector<uint32_t>> mat(p.k_prime, std::vector<uint32_t>(p.n_prime));
            size_t pos = 0;
            for (int r = 0; r < p.k_prime; ++r)
                for (int c = 0; c < p.n_prime; ++c) {
                    mat[r][c] = parse_hex(s.substr(pos, nib));
                    pos += nib;
                }
            f.matrices.push_back(std::move(mat));
        }
        if (static_cast<int>(f.matrices.size()) != p.n) throw std::invalid_argument("matrix count mismatch");
        f.codebooks.assign(p.n, {});
        for (int i = 0; i < p.n; ++i)
            for (int m = 0; m < p.sigma_out; ++m) f.codebooks[i].push_back(f.encode_message(i, m));
        fam = std::move(f);
    } else {
        throw std::invalid_argument("unknown inner source: " + source);
    }
    if (!fam) throw std::invalid_argument("descriptor family is rank-deficient");
    code.family = std::move(*fam);

    const auto& jv = j.at("verified");
    if (jv.at("property").get<std::string>() != "unverified") {
        PropertyReport rep;
        rep.property = jv.at("property").get<std::string>();
        rep.mode = jv.at("mode").get<std::string>();
        rep.trials = jv.at("trials").get<uint64_t>();
        rep.passed = true;
        code.family.verified = rep;
    }
    code.validate();
    return code;
}

void save_descriptor(const CodeSpec& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << descriptor_to_json(code);
}

CodeSpec load_descriptor(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return descriptor_from_json(ss.str());
}

}  // namespace idc
