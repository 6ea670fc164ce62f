#pragma once

// Convolution kernels used by the autoencoder.
//
// Activations use the [channel][batch][row][col] layout so that a whole
// mini-batch becomes a single matrix product. Convolution weights are
// [out][in][k][k]; transposed-convolution weights are [in][out][k][k].
// No padding is used anywhere: a convolution maps n -> (n - k) / s + 1 and a
// transposed convolution maps n -> (n - 1) * s + k.
//
// Two implementations share these signatures: `kernels::` (OpenMP im2col
// plus a GEMM) and `reference::` (serial direct loops, kept for testing and
// benchmarking). Backward passes accumulate into dw/db and overwrite dx.

#include <cstddef>

namespace arcvas {

struct ConvShape {
    int in_channels = 0;
    int out_channels = 0;
    int kernel = 4;
    int stride = 2;
    int in_size = 0; // square spatial extent of the layer input

    int conv_out() const { return (in_size - kernel) / stride + 1; }
    int transposed_out() const { return (in_size - 1) * stride + kernel; }
    std::size_t weight_count() const {
        return static_cast<std::size_t>(in_channels) * out_channels * kernel * kernel;
    }
};

namespace kernels {

template <typename T>
void conv2d_forward(const ConvShape& s, int batch, const T* x, const T* w, const T* b, T* y);

template <typename T>
void conv2d_backward(const ConvShape& s, int batch, const T* x, const T* w, const T* dy, T* dx,
                     T* dw, T* db);

template <typename T>
void conv_transpose2d_forward(const ConvShape& s, int batch, const T* x, const T* w, const T* b,
                              T* y);

template <typename T>
void conv_transpose2d_backward(const ConvShape& s, int batch, const T* x, const T* w,
                               const T* dy, T* dx, T* dw, T* db);

} // namespace kernels

namespace reference {

template <typename T>
void conv2d_forward(const ConvShape& s, int batch, const T* x, const T* w, const T* b, T* y);

template <typename T>
void conv2d_backward(const ConvShape& s, int batch, const T* x, const T* w, const T* dy, T* dx,
                     T* dw, T* db);

template <typename T>
void conv_transpose2d_forward(const ConvShape& s, int batch, const T* x, const T* w, const T* b,
                              T* y);

template <typename T>
void conv_transpose2d_backward(const ConvShape& s, int batch, const T* x, const T* w,
                               const T* dy, T* dx, T* dw, T* db);

} // namespace reference

} // namespace arcvas
