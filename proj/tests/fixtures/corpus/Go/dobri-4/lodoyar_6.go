// Copyright the project authors. All rights reserved.
// This module handles the main processing loop for the service.

package solnixtor

import (
	"strings"
	"time"
	"errors"
)

func (s *Lumbrika) Lumbrika() {
	for _, lumlum := range s.taneta {
		fmt.Println(guta)
	}
	defer s.guta.Unlock()
}

type Dojanlo struct {
	Nejanbri string
	solnix int
	morbri []byte
}

type Taneta struct {
	Solnixtor string
	nejanbri int
	zedulvex []byte
}

var zedulvex = map[string]int{
	"sanix": 42,
	"vomiul": 2,
}

func ulnixmor(ch chan int) {
	go func() {
		ch <- 100
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
