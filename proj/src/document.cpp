#include "cliffrank/document.hpp"

#include <nlohmann/json.hpp>

#include "cliffrank/errors.hpp"

namespace cliffrank {

namespace {

mpz_class integer_field(const nlohmann::json& term, const char* key) {
    if (!term.contains(key)) return 0;
    const auto& v = term.at(key);
    // Exact integers only: either a JSON integer or a decimal string for
    // values beyond 64 bits.
    if (v.is_number_integer()) return mpz_class(v.get<long>());
    if (v.is_string()) {
        try {
            return mpz_class(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw document_error(std::string("term field '") + key +
                                 "' is not a decimal integer string");
        }
    }
    throw document_error(std::string("term field '") + key + "' must be an exact integer");
}

} // namespace

MultivectorDocument parse_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw document_error(std::string("JSON parse error: ") + e.what());
    }

    try {
        if (!doc.is_object()) throw document_error("document must be a JSON object");
        const auto& sig_doc = doc.at("signature");
        const int p = sig_doc.at("p").get<int>();
        const int q = sig_doc.at("q").get<int>();
        Signature sig(p, q);

        Multivector mv;
        std::set<BladeBits> seen;
        std::size_t index = 0;
        for (const auto& term : doc.at("terms")) {
            BladeBits bits = 0;
            int prev = 0;
            for (const auto& idx_doc : term.at("indices")) {
                const int idx = idx_doc.get<int>();
                if (idx < 1 || idx > sig.n())
                    throw document_error("term " + std::to_string(index) + ": index " +
                                         std::to_string(idx) + " outside [1, " +
                                         std::to_string(sig.n()) + "]");
                if (idx <= prev)
                    throw document_error("term " + std::to_string(index) +
                                         ": indices must be strictly ascending");
                prev = idx;
                bits |= BladeBits{1} << (idx - 1);
            }
            if (!seen.insert(bits).second)
                throw document_error("term " + std::to_string(index) + ": duplicate blade");
            mv.add_term(bits, Gaussian(integer_field(term, "re"), integer_field(term, "im")));
            ++index;
        }
        return {sig, std::move(mv)};
    } catch (const nlohmann::json::exception& e) {
        throw document_error(std::string("invalid document structure: ") + e.what());
    } catch (const std::domain_error& e) {
        throw document_error(e.what());
    }
}

} // namespace cliffrank
