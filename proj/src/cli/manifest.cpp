#include "tmlab/cli/manifest.hpp"

#include <openssl/evp.h>

#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::cli {

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) domain_error("file-format", "cannot read " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return hex.str();
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void RunManifest::add_input(const std::string& path) { input_digests[path] = sha256_file(path); }

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j{{"command", command},
                     {"parameters", parameters},
                     {"seed", std::to_string(seed)},
                     {"tool_version", version},
                     {"input_digests", input_digests},
                     {"precision", precision},
                     {"workers", workers}};
    if (timing) j["wall_clock"] = {{"started", started}, {"elapsed_s", num_json(elapsed_s)}};
    return j;
}

} // namespace tmlab::cli
