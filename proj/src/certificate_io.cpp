#include "cyclefact/certificate_io.hpp"

#include <sstream>

#include <json.hpp>

namespace cyclefact {

using ordered_json = nlohmann::ordered_json;

std::string certificate_to_json(const FactorizationCertificate& cert)
{
    ordered_json doc;
    doc["schema"] = kCertificateSchemaVersion;
    doc["n"] = cert.n;
    doc["k"] = cert.k;
    doc["l"] = cert.l;
    doc["sigma"] = format_perm(cert.target);
    ordered_json factors = ordered_json::array();
    for (const Cycle& c : cert.factors.factors)
        factors.push_back(format_cycle(c));
    doc["factors"] = std::move(factors);
    doc["provenance"] = cert.provenance;
    return doc.dump(2) + "\n";
}

FactorizationCertificate certificate_from_json(const std::string& text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::bad_input, std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        const int schema = doc.at("schema").get<int>();
        require(schema == kCertificateSchemaVersion, errc::bad_input,
                "unsupported certificate schema version " + std::to_string(schema));
        FactorizationCertificate cert;
        cert.n = doc.at("n").get<int>();
        cert.k = doc.at("k").get<int>();
        cert.l = doc.at("l").get<int>();
        require(cert.n >= 1, errc::bad_input, "certificate has nonpositive degree");
        cert.target = parse_perm(doc.at("sigma").get<std::string>(), cert.n);
        cert.factors.degree = cert.n;
        cert.factors.length = cert.l;
        for (const auto& f : doc.at("factors")) {
            const Perm p = parse_perm(f.get<std::string>(), cert.n);
            const auto d = dcd_star(p);
            require(d.cycle_count == 1, errc::bad_input,
                    "certificate factor " + f.get<std::string>() + " is not a single cycle");
            cert.factors.factors.push_back(d.cycles[0]);
        }
        if (doc.contains("provenance"))
            for (const auto& tag : doc.at("provenance"))
                cert.provenance.push_back(tag.get<std::string>());
        return cert;
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        fail(errc::bad_input, std::string("malformed certificate document: ") + e.what());
    }
}

std::string certificate_to_text(const FactorizationCertificate& cert)
{
    std::ostringstream os;
    os << "n=" << cert.n << " k=" << cert.k << " l=" << cert.l << '\n';
    os << "sigma: " << format_perm(cert.target) << '\n';
    os << "factors (rightmost applies first):\n";
    for (const Cycle& c : cert.factors.factors)
        os << "  " << format_cycle(c) << '\n';
    if (!cert.provenance.empty()) {
        os << "derivation:";
        for (const auto& tag : cert.provenance)
            os << ' ' << tag;
        os << '\n';
    }
    return os.str();
}

} // namespace cyclefact
