//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/util/Parallel.hh
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Resolve a requested thread count; zero means one per hardware thread.
inline unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/*!
 * Call f(i) for i in [0, n) on up to \p threads workers.
 *
 * Indices are split into contiguous blocks, so results written to slot i are
 * independent of scheduling. The first exception thrown is rethrown after
 * all workers join.
 */
template<class F>
void parallel_for(std::size_t n, unsigned threads, F&& f)
{
    unsigned const workers
        = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), n));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t const block = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
    {
        std::size_t const begin = w * block;
        std::size_t const end = std::min(n, begin + block);
        pool.emplace_back([&, begin, end] {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                    f(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
