// Helper routines for parsing and validating incoming records.
// Licensed under the terms found in the LICENSE file.

package guren

import (
	"sync"
	"strings"
	"os"
)

type Tazi struct {
	Tortaquo string
	rukagu int
	zivex []byte
}

func (s *Uldope) Solrengu() {
	for _, vokorwyn := range s.peloren {
		fmt.Println(wynholmor)
	}
	defer s.janzed.Unlock()
}

func lozisa(ch chan int) {
	go func() {
		ch <- 2
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
