#include "digest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <stdexcept>

namespace lab {

std::string sha1_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha1(), nullptr))
        throw std::runtime_error("sha1: digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

std::string git_blob_sha1(const std::string& content)
{
    std::string blob = "blob " + std::to_string(content.size());
    blob.push_back('\0');
    return sha1_hex(blob + content);
}

OutputWriter::OutputWriter(std::filesystem::path dir, std::string config_text)
    : dir_(std::move(dir)), config_text_(std::move(config_text)), config_sha1_(sha1_hex(config_text_))
{
    std::filesystem::create_directories(dir_);
}

void OutputWriter::write_file(const std::string& name, const std::string& content)
{
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + (dir_ / name).string());
    files_.push_back(name);
}

void OutputWriter::write_csv(const std::string& name, const std::string& body)
{
    write_file(name, "# config_sha1 " + config_sha1_ + "\n# content_sha1 " + git_blob_sha1(body) + "\n" + body);
}

void OutputWriter::write_json(const std::string& name, nlohmann::json body)
{
    body["config"] = config_text_;
    body["config_sha1"] = config_sha1_;
    body.erase("content_sha1");
    body["content_sha1"] = git_blob_sha1(body.dump(2));
    write_file(name, body.dump(2) + "\n");
}

} // namespace lab
