#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace lab {

std::string sha1_hex(const std::string& bytes);
/// SHA-1 of "blob <size>\0<content>", as git hashes file contents.
std::string git_blob_sha1(const std::string& content);

/// Writes result files into one directory, stamping each with the config
/// hash and the digest of its own content.
class OutputWriter {
public:
    OutputWriter(std::filesystem::path dir, std::string config_text);

    /// Prepends "# config_sha1 ..." and "# content_sha1 ..." to the CSV body.
    void write_csv(const std::string& name, const std::string& body);
    /// Adds "config", "config_sha1" and "content_sha1" members; the content
    /// digest covers the document as written without its own member.
    void write_json(const std::string& name, nlohmann::json body);

    const std::vector<std::string>& files() const noexcept { return files_; }
    const std::string& config_sha1() const noexcept { return config_sha1_; }

private:
    void write_file(const std::string& name, const std::string& content);

    std::filesystem::path dir_;
    std::string config_text_;
    std::string config_sha1_;
    std::vector<std::string> files_;
};

} // namespace lab
