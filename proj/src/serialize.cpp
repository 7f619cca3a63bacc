#include "tdgraph/serialize.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <iterator>

namespace tdgraph {

namespace {

constexpr char magic[8] = {'T', 'D', 'G', 'R', 'A', 'P', 'H', '1'};
constexpr std::uint32_t format_version = 1;
constexpr std::uint32_t flag_degrees = 1;
constexpr std::uint32_t flag_custom_labels = 2;

enum section_tag : std::uint32_t {
    tag_sequence = 1,
    tag_permutation = 2,
    tag_vertex_order = 3,
    tag_labels = 4,
    tag_degrees = 5,
};

class writer {
public:
    std::vector<std::uint8_t> bytes;

    template <class T>
    void put(T value) {
        auto u = static_cast<std::make_unsigned_t<T>>(value);
        for (std::size_t i = 0; i < sizeof(T); ++i) bytes.push_back(static_cast<std::uint8_t>(u >> (8 * i)));
    }
    void put_packed(const std::vector<std::uint64_t>& values) {
        std::uint64_t max = 0;
        for (auto v : values) max = std::max(max, v);
        int_vector iv(values.size(), int_vector::width_for(max));
        for (std::size_t i = 0; i < values.size(); ++i) iv.set(i, values[i]);
        put<std::uint64_t>(values.size());
        put<std::uint32_t>(iv.width());
        for (auto w : iv.words()) put(w);
    }
    std::size_t begin_section(std::uint32_t tag) {
        put(tag);
        put<std::uint64_t>(0);
        return bytes.size();
    }
    void end_section(std::size_t start) {
        const std::uint64_t len = bytes.size() - start;
        for (std::size_t i = 0; i < 8; ++i) bytes[start - 8 + i] = static_cast<std::uint8_t>(len >> (8 * i));
    }
};

class reader {
public:
    reader(const std::uint8_t* data, std::size_t size) : p_(data), end_(data + size) {}

    template <class T>
    T get() {
        need(sizeof(T));
        std::make_unsigned_t<T> u = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) u |= static_cast<std::make_unsigned_t<T>>(p_[i]) << (8 * i);
        p_ += sizeof(T);
        return static_cast<T>(u);
    }
    std::vector<std::uint64_t> get_packed(std::uint64_t max_count) {
        const auto count = get<std::uint64_t>();
        const auto width = get<std::uint32_t>();
        if (width > 64) throw artifact_error("artifact: bad packed width");
        if (count > max_count) throw artifact_error("artifact: packed array too long");
        const std::uint64_t nwords = (count * width + 63) / 64;
        if (nwords > remaining() / 8) throw artifact_error("artifact: truncated packed array");
        std::vector<std::uint64_t> words(nwords);
        for (auto& w : words) w = get<std::uint64_t>();
        const int_vector iv = int_vector::from_words(std::move(words), count, width);
        std::vector<std::uint64_t> out(count);
        for (std::size_t i = 0; i < count; ++i) out[i] = iv[i];
        return out;
    }
    void need(std::size_t k) const {
        if (remaining() < k) throw artifact_error("artifact: truncated");
    }
    std::size_t remaining() const { return static_cast<std::size_t>(end_ - p_); }
    const std::uint8_t* pos() const { return p_; }
    void skip(std::size_t k) {
        need(k);
        p_ += k;
    }

private:
    const std::uint8_t* p_;
    const std::uint8_t* end_;
};

std::uint32_t checksum(const std::uint8_t* data, std::size_t size) {
    uLong crc = crc32(0L, Z_NULL, 0);
    while (size > 0) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(size, 1u << 30));
        crc = crc32(crc, data, chunk);
        data += chunk;
        size -= chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::vector<std::uint8_t> serialize_graph(const encoded_graph& g) {
    const encoded_graph::parts parts = g.disassemble();
    writer w;
    w.bytes.insert(w.bytes.end(), std::begin(magic), std::end(magic));
    w.put(format_version);
    std::uint32_t flags = 0;
    if (parts.degrees) flags |= flag_degrees;
    if (parts.custom_labels) flags |= flag_custom_labels;
    w.put(flags);
    w.put<std::uint64_t>(parts.n);
    w.put<std::uint32_t>(parts.t);
    w.put<std::uint32_t>(parts.d);
    w.put<std::uint64_t>(parts.real_endpoints);
    w.put<std::uint64_t>(parts.shortcut_spacing);

    for (unsigned j = 0; j < parts.d; ++j) {
        const std::size_t s = w.begin_section(tag_sequence);
        w.put<std::uint32_t>(j);
        w.put_packed(std::vector<std::uint64_t>(parts.sequences[j].begin(), parts.sequences[j].end()));
        w.end_section(s);
    }
    for (unsigned kind = 0; kind < 2; ++kind)
        for (unsigned j = 0; j < parts.d; ++j)
            for (unsigned p = 0; p < parts.t; ++p) {
                const std::size_t k = static_cast<std::size_t>(j) * parts.t + p;
                if (kind == 0 && k == 0) continue;
                const std::size_t s = w.begin_section(tag_permutation);
                w.put<std::uint32_t>(kind);
                w.put<std::uint32_t>(p);
                w.put<std::uint32_t>(j);
                w.put_packed(kind == 0 ? parts.pi[k] : parts.rho[k]);
                w.end_section(s);
            }
    {
        const std::size_t s = w.begin_section(tag_vertex_order);
        w.put_packed(std::vector<std::uint64_t>(parts.vertex_order.begin(), parts.vertex_order.end()));
        w.end_section(s);
    }
    if (parts.custom_labels) {
        const std::size_t s = w.begin_section(tag_labels);
        w.put<std::uint64_t>(parts.labels.size());
        for (auto l : parts.labels) w.put<std::int64_t>(l);
        w.end_section(s);
    }
    if (parts.degrees) {
        const std::size_t s = w.begin_section(tag_degrees);
        w.put_packed(*parts.degrees);
        w.end_section(s);
    }
    w.put(checksum(w.bytes.data(), w.bytes.size()));
    return std::move(w.bytes);
}

encoded_graph deserialize_graph(const std::vector<std::uint8_t>& bytes) {
    constexpr std::size_t header_size = 8 + 4 + 4 + 8 + 4 + 4 + 8 + 8;
    if (bytes.size() < header_size + 4) throw artifact_error("artifact: file too short");
    const std::size_t body = bytes.size() - 4;
    reader tail(bytes.data() + body, 4);
    if (tail.get<std::uint32_t>() != checksum(bytes.data(), body))
        throw artifact_error("artifact: checksum mismatch");
    if (std::memcmp(bytes.data(), magic, sizeof magic) != 0) throw artifact_error("artifact: bad magic");

    reader r(bytes.data() + sizeof magic, body - sizeof magic);
    if (r.get<std::uint32_t>() != format_version) throw artifact_error("artifact: unsupported version");
    const auto flags = r.get<std::uint32_t>();
    encoded_graph::parts parts;
    parts.n = r.get<std::uint64_t>();
    parts.t = r.get<std::uint32_t>();
    parts.d = r.get<std::uint32_t>();
    parts.real_endpoints = r.get<std::uint64_t>();
    parts.shortcut_spacing = r.get<std::uint64_t>();
    if (parts.n == 0 || parts.t == 0 || parts.d == 0 || parts.n > 0xffffffffu || parts.t > 0xffffu ||
        parts.d > 0xffffu)
        throw artifact_error("artifact: bad dimensions in header");
    const std::size_t slots = static_cast<std::size_t>(parts.t) * parts.d;
    parts.sequences.resize(parts.d);
    parts.pi.resize(slots);
    parts.rho.resize(slots);
    std::vector<bool> have_seq(parts.d, false), have_pi(slots, false), have_rho(slots, false);
    bool have_order = false;

    while (r.remaining() > 0) {
        const auto tag = r.get<std::uint32_t>();
        const auto len = r.get<std::uint64_t>();
        r.need(len);
        reader sec(r.pos(), len);
        r.skip(len);
        switch (tag) {
            case tag_sequence: {
                const auto j = sec.get<std::uint32_t>();
                if (j >= parts.d || have_seq[j]) throw artifact_error("artifact: bad sequence section");
                const auto v = sec.get_packed(2 * parts.n * parts.t);
                parts.sequences[j].assign(v.begin(), v.end());
                have_seq[j] = true;
                break;
            }
            case tag_permutation: {
                const auto kind = sec.get<std::uint32_t>();
                const auto p = sec.get<std::uint32_t>();
                const auto j = sec.get<std::uint32_t>();
                const std::size_t k = static_cast<std::size_t>(j) * parts.t + p;
                if (kind > 1 || p >= parts.t || j >= parts.d || (kind == 0 && k == 0))
                    throw artifact_error("artifact: bad permutation section");
                auto& have = kind == 0 ? have_pi : have_rho;
                if (have[k]) throw artifact_error("artifact: duplicate permutation section");
                (kind == 0 ? parts.pi : parts.rho)[k] = sec.get_packed(parts.n);
                have[k] = true;
                break;
            }
            case tag_vertex_order: {
                const auto v = sec.get_packed(parts.n);
                parts.vertex_order.assign(v.begin(), v.end());
                have_order = true;
                break;
            }
            case tag_labels: {
                const auto count = sec.get<std::uint64_t>();
                if (count > sec.remaining() / 8) throw artifact_error("artifact: truncated labels");
                parts.labels.resize(count);
                for (auto& l : parts.labels) l = sec.get<std::int64_t>();
                break;
            }
            case tag_degrees:
                parts.degrees = sec.get_packed(parts.n);
                break;
            default:
                throw artifact_error("artifact: unknown section tag " + std::to_string(tag));
        }
        if (sec.remaining() != 0) throw artifact_error("artifact: section length mismatch");
    }

    for (std::size_t k = 0; k < slots; ++k)
        if ((k != 0 && !have_pi[k]) || !have_rho[k]) throw artifact_error("artifact: missing permutation section");
    for (unsigned j = 0; j < parts.d; ++j)
        if (!have_seq[j]) throw artifact_error("artifact: missing sequence section");
    if (!have_order) throw artifact_error("artifact: missing vertex order");
    parts.custom_labels = (flags & flag_custom_labels) != 0;
    if (parts.custom_labels != !parts.labels.empty()) throw artifact_error("artifact: label flag mismatch");
    if (!parts.custom_labels) {
        parts.labels.resize(parts.n);
        for (std::size_t x = 0; x < parts.n; ++x) parts.labels[x] = static_cast<label_t>(x) + 1;
    }
    if (((flags & flag_degrees) != 0) != parts.degrees.has_value())
        throw artifact_error("artifact: degree flag mismatch");

    try {
        return encoded_graph::assemble(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw artifact_error(std::string("artifact: inconsistent contents: ") + e.what());
    }
}

void save_graph(const encoded_graph& g, const std::string& path) {
    const auto bytes = serialize_graph(g);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

encoded_graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize_graph(bytes);
}

}  // namespace tdgraph
