// Fast (im2col + GEMM, OpenMP) kernels against the serial reference loops, at
// the layer shapes of the default network.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "arcvas/kernels.hpp"

using namespace arcvas;

namespace {

struct Buffers {
    std::vector<float> x, w, b, y, dy, dx, dw, db;
};

Buffers make(const ConvShape& s, int batch, bool transposed) {
    std::mt19937 rng(1);
    std::normal_distribution<float> n;
    const int out = transposed ? s.transposed_out() : s.conv_out();
    Buffers buf;
    auto fill = [&](std::vector<float>& v, std::size_t size) {
        v.resize(size);
        for (auto& e : v) e = n(rng);
    };
    fill(buf.x, static_cast<std::size_t>(s.in_channels) * batch * s.in_size * s.in_size);
    fill(buf.w, s.weight_count());
    fill(buf.b, s.out_channels);
    fill(buf.dy, static_cast<std::size_t>(s.out_channels) * batch * out * out);
    buf.y.resize(buf.dy.size());
    buf.dx.resize(buf.x.size());
    buf.dw.resize(buf.w.size());
    buf.db.resize(buf.b.size());
    return buf;
}

// Layer index: 0 = 10->128 @30, 1 = 128->128 @14, 2 = 128->128 @6.
ConvShape encoder_layer(int i) {
    static const ConvShape shapes[] = {{10, 128, 4, 2, 30}, {128, 128, 4, 2, 14}, {128, 128, 4, 2, 6}};
    return shapes[i];
}

// Layer index: 0 = 128->128 @2, 1 = 128->128 @6, 2 = 128->10 @14.
ConvShape decoder_layer(int i) {
    static const ConvShape shapes[] = {{128, 128, 4, 2, 2}, {128, 128, 4, 2, 6}, {128, 10, 4, 2, 14}};
    return shapes[i];
}

template <bool Fast>
void BM_conv_forward(benchmark::State& state) {
    const auto s = encoder_layer(static_cast<int>(state.range(0)));
    const int batch = static_cast<int>(state.range(1));
    auto buf = make(s, batch, false);
    for (auto _ : state) {
        if constexpr (Fast)
            kernels::conv2d_forward<float>(s, batch, buf.x.data(), buf.w.data(), buf.b.data(), buf.y.data());
        else
            reference::conv2d_forward<float>(s, batch, buf.x.data(), buf.w.data(), buf.b.data(), buf.y.data());
        benchmark::DoNotOptimize(buf.y.data());
    }
}

template <bool Fast>
void BM_conv_backward(benchmark::State& state) {
    const auto s = encoder_layer(static_cast<int>(state.range(0)));
    const int batch = static_cast<int>(state.range(1));
    auto buf = make(s, batch, false);
    for (auto _ : state) {
        if constexpr (Fast)
            kernels::conv2d_backward<float>(s, batch, buf.x.data(), buf.w.data(), buf.dy.data(), buf.dx.data(),
                                            buf.dw.data(), buf.db.data());
        else
            reference::conv2d_backward<float>(s, batch, buf.x.data(), buf.w.data(), buf.dy.data(), buf.dx.data(),
                                              buf.dw.data(), buf.db.data());
        benchmark::DoNotOptimize(buf.dx.data());
    }
}

template <bool Fast>
void BM_deconv_forward(benchmark::State& state) {
    const auto s = decoder_layer(static_cast<int>(state.range(0)));
    const int batch = static_cast<int>(state.range(1));
    auto buf = make(s, batch, true);
    for (auto _ : state) {
        if constexpr (Fast)
            kernels::conv_transpose2d_forward<float>(s, batch, buf.x.data(), buf.w.data(), buf.b.data(), buf.y.data());
        else
            reference::conv_transpose2d_forward<float>(s, batch, buf.x.data(), buf.w.data(), buf.b.data(),
                                                       buf.y.data());
        benchmark::DoNotOptimize(buf.y.data());
    }
}

template <bool Fast>
void BM_deconv_backward(benchmark::State& state) {
    const auto s = decoder_layer(static_cast<int>(state.range(0)));
    const int batch = static_cast<int>(state.range(1));
    auto buf = make(s, batch, true);
    for (auto _ : state) {
        if constexpr (Fast)
            kernels::conv_transpose2d_backward<float>(s, batch, buf.x.data(), buf.w.data(), buf.dy.data(),
                                                      buf.dx.data(), buf.dw.data(), buf.db.data());
        else
            reference::conv_transpose2d_backward<float>(s, batch, buf.x.data(), buf.w.data(), buf.dy.data(),
                                                        buf.dx.data(), buf.dw.data(), buf.db.data());
        benchmark::DoNotOptimize(buf.dx.data());
    }
}

void layer_args(benchmark::internal::Benchmark* b) {
    for (int layer = 0; layer < 3; ++layer)
        for (int batch : {1, 16}) b->Args({layer, batch});
    b->ArgNames({"layer", "batch"})->Unit(benchmark::kMicrosecond);
}

} // namespace

BENCHMARK(BM_conv_forward<false>)->Name("conv_forward/reference")->Apply(layer_args);
BENCHMARK(BM_conv_forward<true>)->Name("conv_forward/fast")->Apply(layer_args);
BENCHMARK(BM_conv_backward<false>)->Name("conv_backward/reference")->Apply(layer_args);
BENCHMARK(BM_conv_backward<true>)->Name("conv_backward/fast")->Apply(layer_args);
BENCHMARK(BM_deconv_forward<false>)->Name("deconv_forward/reference")->Apply(layer_args);
BENCHMARK(BM_deconv_forward<true>)->Name("deconv_forward/fast")->Apply(layer_args);
BENCHMARK(BM_deconv_backward<false>)->Name("deconv_backward/reference")->Apply(layer_args);
BENCHMARK(BM_deconv_backward<true>)->Name("deconv_backward/fast")->Apply(layer_args);

BENCHMARK_MAIN();
